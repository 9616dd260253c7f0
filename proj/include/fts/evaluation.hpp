#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fts/baselines.hpp"
#include "fts/model.hpp"
#include "fts/selection.hpp"

namespace fts {

struct SplitSpec {
    std::size_t total;
    std::size_t train;
};

inline void validate(const SplitSpec& split) {
    if (!(split.train > 0 && split.train < split.total))
        throw std::invalid_argument("SplitSpec: need 0 < train < total");
}

struct ErrorSummary {
    double mse = std::numeric_limits<double>::quiet_NaN();
    double variance = std::numeric_limits<double>::quiet_NaN();  // of squared errors
    std::size_t n_fallbacks = 0;
    std::size_t n_intervals = 0;  // FTS only, 0 for the crisp baselines
    bool ok = false;
    std::string error;  // set when the fit failed
};

enum class ModelId { fts, linear, quadratic, combined };

inline const char* model_name(ModelId id) {
    switch (id) {
        case ModelId::fts: return "model1_fts";
        case ModelId::linear: return "model2_linear";
        case ModelId::quadratic: return "model3_quadratic";
        case ModelId::combined: return "model4_combined";
    }
    return "unknown";
}

enum class IntervalSelection { fixed, aic, average };

struct FtsOptions {
    IntervalSelection selection = IntervalSelection::aic;
    std::size_t fixed_n = 9;
    std::optional<Interval> universe;  // default: range of the training half
};

struct ReportRow {
    std::string sweep_var;
    double sweep_value;
    ModelId model;
    ErrorSummary summary;
};

struct ExperimentReport {
    std::string name;
    std::vector<ReportRow> rows;
    std::vector<std::pair<std::string, std::string>> config;  // parameter echo
    std::map<std::string, double> annotations;
};

namespace detail {

inline TimeSeries head(const TimeSeries& series, std::size_t count) {
    TimeSeries out = series;
    out.values.assign(series.values.begin(), series.values.begin() + count);
    return out;
}

/// Score h-step forecasts against every observation in the test half:
/// for each target index t in [train, total) the forecast launches from
/// observation t-h.
inline ErrorSummary score(const std::function<ForecastOutcome(double, std::size_t)>& predict,
                          const TimeSeries& eval_series, SplitSpec split, std::size_t h) {
    ErrorSummary summary;
    std::vector<double> sq_errors;
    sq_errors.reserve(split.total - split.train);
    for (std::size_t t = split.train; t < split.total; ++t) {
        if (t < h) continue;
        const ForecastOutcome out = predict(eval_series.values[t - h], h);
        const double e = out.value - eval_series.values[t];
        sq_errors.push_back(e * e);
        if (out.fallback) ++summary.n_fallbacks;
    }
    double mean = 0.0;
    for (double s : sq_errors) mean += s;
    mean /= static_cast<double>(sq_errors.size());
    double var = 0.0;
    for (double s : sq_errors) var += (s - mean) * (s - mean);
    if (sq_errors.size() > 1) var /= static_cast<double>(sq_errors.size() - 1);
    summary.mse = mean;
    summary.variance = var;
    summary.ok = true;
    return summary;
}

inline Interval training_universe(const TimeSeries& train, const FtsOptions& opts) {
    if (opts.universe) return *opts.universe;
    const auto [lo, hi] = std::minmax_element(train.values.begin(), train.values.end());
    return {*lo, *hi};
}

inline std::size_t pick_intervals(const TimeSeries& train, Interval universe,
                                  const FtsOptions& opts) {
    switch (opts.selection) {
        case IntervalSelection::fixed: return opts.fixed_n;
        case IntervalSelection::aic: return select_intervals_aic(train, universe).n_star;
        case IntervalSelection::average:
            return std::max<std::size_t>(2, average_based_length(train, universe).intervals);
    }
    throw std::logic_error("pick_intervals: unknown selection");
}

}  // namespace detail

/// Fit every requested model on the first split.train samples of fit_series
/// and score h-step forecasts on the test half of eval_series. Fit failures
/// are recorded per model, not thrown.
inline std::map<ModelId, ErrorSummary> evaluate_models(
    const std::vector<ModelId>& models, const TimeSeries& fit_series,
    const TimeSeries& eval_series, SplitSpec split, std::size_t h,
    const FtsOptions& fts_opts = {}) {
    validate(split);
    if (eval_series.size() < split.total)
        throw std::invalid_argument("evaluate_models: eval series shorter than split.total");
    const TimeSeries train = detail::head(fit_series, split.train);

    std::map<ModelId, ErrorSummary> result;
    for (ModelId id : models) {
        try {
            if (id == ModelId::fts) {
                const Interval universe = detail::training_universe(train, fts_opts);
                const std::size_t n = detail::pick_intervals(train, universe, fts_opts);
                const FtsModel model = fit(train, uniform_partition(universe, n));
                auto summary = detail::score(
                    [&](double x, std::size_t steps) { return forecast_h(model, x, steps); },
                    eval_series, split, h);
                summary.n_intervals = n;
                result[id] = summary;
            } else {
                const ArKind kind = (id == ModelId::linear)      ? ArKind::linear
                                    : (id == ModelId::quadratic) ? ArKind::quadratic
                                                                 : ArKind::combined;
                const ArModel model = fit_ar(train, kind);
                result[id] = detail::score(
                    [&](double x, std::size_t steps) {
                        return ForecastOutcome{predict_ar(model, x, steps), false};
                    },
                    eval_series, split, h);
            }
        } catch (const std::exception& ex) {
            ErrorSummary failed;
            failed.error = ex.what();
            result[id] = failed;
        }
    }
    return result;
}

inline std::map<ModelId, ErrorSummary> evaluate_one_step(
    const std::vector<ModelId>& models, const TimeSeries& series, SplitSpec split,
    const FtsOptions& fts_opts = {}) {
    return evaluate_models(models, series, series, split, 1, fts_opts);
}

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> grid;
    grid.reserve(count);
    if (count == 1) return {lo};
    for (std::size_t i = 0; i < count; ++i)
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
    return grid;
}

namespace detail {

inline void append_rows(ExperimentReport& report, const std::string& var, double value,
                        const std::map<ModelId, ErrorSummary>& summaries) {
    for (const auto& [id, summary] : summaries)
        report.rows.push_back({var, value, id, summary});
}

}  // namespace detail

/// One-step MSE of models 1-3 across initial conditions at fixed r, with a
/// fixed interval count (model 4 omitted: its error is essentially zero).
inline ExperimentReport sweep_initial_condition(double r, const std::vector<double>& x1_grid,
                                                SplitSpec split = {1000, 500},
                                                std::size_t n_intervals = 9) {
    if (x1_grid.empty())
        throw std::invalid_argument("sweep_initial_condition: empty grid");
    ExperimentReport report;
    report.name = "initial_condition_sweep";
    report.config = {{"r", std::to_string(r)},
                     {"total", std::to_string(split.total)},
                     {"train", std::to_string(split.train)},
                     {"n_intervals", std::to_string(n_intervals)},
                     {"universe", "[0,1]"},
                     {"h", "1"}};
    FtsOptions opts;
    opts.selection = IntervalSelection::fixed;
    opts.fixed_n = n_intervals;
    opts.universe = Interval{0.0, 1.0};
    for (double x1 : x1_grid) {
        const TimeSeries series = generate({r, x1, split.total});
        detail::append_rows(report, "x1", x1,
                            evaluate_one_step({ModelId::fts, ModelId::linear, ModelId::quadratic},
                                              series, split, opts));
    }
    return report;
}

/// One-step MSE of models 1-3 across r, with AIC-selected intervals per r.
inline ExperimentReport sweep_r(double x1, const std::vector<double>& r_grid,
                                SplitSpec split = {1000, 500}) {
    if (r_grid.empty())
        throw std::invalid_argument("sweep_r: empty grid");
    ExperimentReport report;
    report.name = "r_sweep";
    report.config = {{"x1", std::to_string(x1)},
                     {"total", std::to_string(split.total)},
                     {"train", std::to_string(split.train)},
                     {"selection", "aic"},
                     {"universe", "[0,1]"},
                     {"h", "1"}};
    FtsOptions opts;
    opts.selection = IntervalSelection::aic;
    opts.universe = Interval{0.0, 1.0};
    for (double r : r_grid) {
        const TimeSeries series = generate({r, x1, split.total});
        detail::append_rows(report, "r", r,
                            evaluate_one_step({ModelId::fts, ModelId::linear, ModelId::quadratic},
                                              series, split, opts));
    }
    return report;
}

/// h-step MSE of models 1 and 4 on noise-contaminated observations. The
/// universe of discourse follows the noisy training range.
inline ExperimentReport noise_experiment(double r, const std::vector<double>& x1_grid,
                                         double sigma, std::size_t h, std::uint64_t seed,
                                         SplitSpec split = {1000, 500}) {
    if (sigma < 0.0)
        throw std::invalid_argument("noise_experiment: sigma must be >= 0");
    if (h < 1)
        throw std::invalid_argument("noise_experiment: h must be >= 1");
    ExperimentReport report;
    report.name = "noise_experiment";
    report.config = {{"r", std::to_string(r)},
                     {"sigma", std::to_string(sigma)},
                     {"h", std::to_string(h)},
                     {"seed", std::to_string(seed)},
                     {"total", std::to_string(split.total)},
                     {"train", std::to_string(split.train)},
                     {"selection", "aic"},
                     {"universe", "train-range"}};
    FtsOptions opts;
    opts.selection = IntervalSelection::aic;
    std::uint64_t point_seed = seed;
    for (double x1 : x1_grid) {
        const TimeSeries noisy = add_noise(generate({r, x1, split.total}), sigma, point_seed++);
        detail::append_rows(report, "x1", x1,
                            evaluate_models({ModelId::fts, ModelId::combined}, noisy, noisy,
                                            split, h, opts));
    }
    return report;
}

/// Models fitted at r_train forecast h steps ahead of trajectories generated
/// at each test r; no refitting per test point.
inline ExperimentReport mismatch_experiment(double r_train, const std::vector<double>& r_test_grid,
                                            double x1, std::size_t h,
                                            SplitSpec split = {1000, 500}) {
    if (r_test_grid.empty())
        throw std::invalid_argument("mismatch_experiment: empty grid");
    ExperimentReport report;
    report.name = "mismatch_experiment";
    report.config = {{"r_train", std::to_string(r_train)},
                     {"x1", std::to_string(x1)},
                     {"h", std::to_string(h)},
                     {"total", std::to_string(split.total)},
                     {"train", std::to_string(split.train)},
                     {"selection", "aic"},
                     {"universe", "[0,1]"}};
    FtsOptions opts;
    opts.selection = IntervalSelection::aic;
    opts.universe = Interval{0.0, 1.0};
    const TimeSeries fit_series = generate({r_train, x1, split.total});
    const std::vector<ModelId> models = {ModelId::fts, ModelId::linear, ModelId::quadratic,
                                         ModelId::combined};
    for (double r_test : r_test_grid) {
        const TimeSeries eval_series = generate({r_test, x1, split.total});
        detail::append_rows(report, "r_test", r_test,
                            evaluate_models(models, fit_series, eval_series, split, h, opts));
    }
    return report;
}

/// One-step FTS MSE across interval counts, annotated with the AIC-selected
/// and average-method counts for the same training data.
inline ExperimentReport interval_count_scan(double r, double x1,
                                            const std::vector<std::size_t>& n_grid,
                                            SplitSpec split = {1000, 500}) {
    if (n_grid.empty())
        throw std::invalid_argument("interval_count_scan: empty grid");
    for (std::size_t n : n_grid)
        if (n < 2) throw std::invalid_argument("interval_count_scan: counts must be >= 2");
    ExperimentReport report;
    report.name = "interval_count_scan";
    report.config = {{"r", std::to_string(r)},
                     {"x1", std::to_string(x1)},
                     {"total", std::to_string(split.total)},
                     {"train", std::to_string(split.train)},
                     {"universe", "[0,1]"},
                     {"h", "1"}};
    const TimeSeries series = generate({r, x1, split.total});
    const Interval universe{0.0, 1.0};
    FtsOptions opts;
    opts.selection = IntervalSelection::fixed;
    opts.universe = universe;
    for (std::size_t n : n_grid) {
        opts.fixed_n = n;
        detail::append_rows(report, "n_intervals", static_cast<double>(n),
                            evaluate_one_step({ModelId::fts}, series, split, opts));
    }
    const TimeSeries train = detail::head(series, split.train);
    report.annotations["aic_n"] =
        static_cast<double>(select_intervals_aic(train, universe).n_star);
    report.annotations["average_n"] =
        static_cast<double>(average_based_length(train, universe).intervals);
    return report;
}

}  // namespace fts
