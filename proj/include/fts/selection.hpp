#pragma once

#include <vector>

#include "fts/model.hpp"

namespace fts {

struct AicPoint {
    std::size_t n_intervals;
    double aic_value;
};

struct AicSelection {
    std::size_t n_star = 0;
    std::vector<AicPoint> curve;  // successfully fitted n only
};

/// In-sample one-step residual sum of squares of an FTS model over the series
/// it was fitted on.
inline double in_sample_rss(const FtsModel& model, const TimeSeries& series) {
    double rss = 0.0;
    for (std::size_t k = 0; k + 1 < series.size(); ++k) {
        const double e = forecast_one(model, series.values[k]).value - series.values[k + 1];
        rss += e * e;
    }
    return rss;
}

/// First local minimum of the curve: the smallest n with AIC(n) < AIC(n+1),
/// tested only across adjacent interval counts. Falls back to the global
/// argmin when the curve is monotone decreasing.
inline std::size_t select_from_curve(const std::vector<AicPoint>& curve) {
    if (curve.empty())
        throw std::invalid_argument("select_from_curve: empty curve");
    for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
        if (curve[i + 1].n_intervals == curve[i].n_intervals + 1 &&
            curve[i].aic_value < curve[i + 1].aic_value)
            return curve[i].n_intervals;
    }
    std::size_t n_star = curve.front().n_intervals;
    double best = curve.front().aic_value;
    for (const auto& p : curve)
        if (p.aic_value < best) {
            best = p.aic_value;
            n_star = p.n_intervals;
        }
    return n_star;
}

/// Pick the number of intervals as the first local minimum of the AIC curve
/// computed from in-sample one-step residuals.
inline AicSelection select_intervals_aic(const TimeSeries& series, Interval universe,
                                         std::size_t n_min = 2, std::size_t n_max = 30) {
    if (n_min < 2 || n_min > n_max)
        throw std::invalid_argument("select_intervals_aic: need 2 <= n_min <= n_max");
    AicSelection sel;
    const auto n_residuals = series.size() - 1;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        try {
            const FtsModel model = fit(series, uniform_partition(universe, n));
            sel.curve.push_back({n, aic(in_sample_rss(model, series), n_residuals, n)});
        } catch (const std::exception&) {
            // unfittable n: recorded as absent from the curve
        }
    }
    if (sel.curve.empty())
        throw std::runtime_error("select_intervals_aic: no interval count could be fitted");
    sel.n_star = select_from_curve(sel.curve);
    return sel;
}

inline AicSelection select_intervals_aic(const TimeSeries& series,
                                         std::size_t n_min = 2, std::size_t n_max = 30) {
    const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
    return select_intervals_aic(series, Interval{*lo, *hi}, n_min, n_max);
}

}  // namespace fts
