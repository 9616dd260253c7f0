// Command line surface for the logistic-map FTS forecasting toolkit.
//
// Subcommands cover trajectory generation, model fitting/forecasting and the
// five benchmark experiments. Every command writes CSV; SVG plots are an
// optional convenience rendering.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "fts/evaluation.hpp"
#include "fts/io.hpp"
#include "fts/svg.hpp"

namespace {

std::string output_dir() {
    if (const char* dir = std::getenv("FTS_OUTPUT_DIR")) return dir;
    return ".";
}

std::string resolve(const std::string& path, const std::string& fallback_name) {
    if (!path.empty()) return path;
    return output_dir() + "/" + fallback_name;
}

void render_report_svg(const std::string& path, const fts::ExperimentReport& report,
                       bool log_x = false) {
    fts::SvgPlot plot(report.name);
    const char* colors[] = {"steelblue", "firebrick", "seagreen", "darkorange"};
    int color = 0;
    for (fts::ModelId id : {fts::ModelId::fts, fts::ModelId::linear, fts::ModelId::quadratic,
                            fts::ModelId::combined}) {
        std::vector<double> xs, ys;
        for (const auto& row : report.rows)
            if (row.model == id && row.summary.ok) {
                xs.push_back(log_x ? std::log10(row.sweep_value) : row.sweep_value);
                ys.push_back(row.summary.mse);
            }
        if (!xs.empty()) plot.add_line(xs, ys, colors[color]);
        ++color;
    }
    auto out = fts::open_output(path);
    plot.render(out);
}

void write_report(const fts::ExperimentReport& report, const std::string& csv_path,
                  const std::string& svg_path) {
    auto out = fts::open_output(csv_path);
    fts::write_report_csv(out, report);
    auto cfg = fts::open_output(csv_path + ".config.txt");
    fts::write_report_config(cfg, report);
    if (!svg_path.empty()) render_report_svg(svg_path, report);
    std::cout << report.name << ": " << report.rows.size() << " rows -> " << csv_path << '\n';
    for (const auto& [key, value] : report.annotations)
        std::cout << "  " << key << " = " << value << '\n';
}

fts::IntervalSelection parse_selection(const std::string& name) {
    if (name == "aic") return fts::IntervalSelection::aic;
    if (name == "average") return fts::IntervalSelection::average;
    if (name == "fixed") return fts::IntervalSelection::fixed;
    throw std::invalid_argument("unknown selection method: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"First-order fuzzy time series forecasting of the chaotic logistic map"};
    app.set_help_flag("--help", "print help");  // frees -h / --h for the horizon flag
    app.require_subcommand(1);

    double r = 3.999, x1 = 0.1, sigma = 0.1;
    std::size_t n = 1000, train = 500, h = 3, intervals = 9, max_lag = 20;
    std::uint64_t seed = 1;
    double u_lo = 0.0, u_hi = 1.0;
    std::string selection = "aic";
    std::string out_path, svg_path, model_path;

    auto add_map_flags = [&](CLI::App* cmd) {
        cmd->add_option("--r", r, "bifurcation parameter, in [0,4]");
        cmd->add_option("--x1", x1, "initial condition, in [0,1]");
        cmd->add_option("--n", n, "number of samples");
    };

    auto* gen = app.add_subcommand("generate", "generate a logistic-map series as CSV");
    add_map_flags(gen);
    gen->add_option("--sigma", sigma, "measurement noise std deviation (0 = none)")
        ->default_val(0.0);
    gen->add_option("--seed", seed, "noise RNG seed");
    gen->add_option("--out", out_path, "output CSV path");

    auto* acf_cmd = app.add_subcommand("acf", "autocorrelation function of a generated series");
    add_map_flags(acf_cmd);
    acf_cmd->add_option("--max-lag", max_lag, "largest lag");
    acf_cmd->add_option("--out", out_path, "output CSV path");

    double r_min = 2.5, r_max = 4.0;
    std::size_t r_steps = 600, transient = 500, keep = 200;
    auto* bif = app.add_subcommand("bifurcation", "bifurcation diagram scan");
    bif->add_option("--r-min", r_min, "low end of the r grid");
    bif->add_option("--r-max", r_max, "high end of the r grid");
    bif->add_option("--r-steps", r_steps, "grid resolution");
    bif->add_option("--transient", transient, "iterations discarded per r");
    bif->add_option("--keep", keep, "iterations kept per r");
    bif->add_option("--out", out_path, "output CSV path");
    bif->add_option("--svg", svg_path, "optional SVG scatter plot");

    auto* fit_cmd = app.add_subcommand("fit", "fit an FTS model and save it");
    add_map_flags(fit_cmd);
    fit_cmd->add_option("--method", selection, "interval selection: aic|average|fixed");
    fit_cmd->add_option("--intervals", intervals, "interval count for --method fixed");
    fit_cmd->add_option("--universe-lo", u_lo, "universe lower bound");
    fit_cmd->add_option("--universe-hi", u_hi, "universe upper bound");
    fit_cmd->add_option("--out", model_path, "model file path");

    double x0 = 0.1;
    auto* fc = app.add_subcommand("forecast", "forecast h steps from a saved model");
    fc->add_option("--model", model_path, "model file path")->required();
    fc->add_option("--from", x0, "launch observation")->required();
    fc->add_option("--h", h, "forecast horizon")->default_val(1);

    auto* aic_scan = app.add_subcommand("aic-scan", "AIC curve over interval counts");
    add_map_flags(aic_scan);
    aic_scan->add_option("--universe-lo", u_lo, "universe lower bound");
    aic_scan->add_option("--universe-hi", u_hi, "universe upper bound");
    aic_scan->add_option("--out", out_path, "curve CSV path");

    std::size_t grid_points = 81;
    auto* exp1 = app.add_subcommand("exp-initial", "one-step MSE across initial conditions");
    exp1->add_option("--r", r, "bifurcation parameter");
    exp1->add_option("--points", grid_points, "x1 grid resolution over [0.1,0.9]");
    exp1->add_option("--n", n, "total samples");
    exp1->add_option("--train", train, "training samples");
    exp1->add_option("--intervals", intervals, "fixed FTS interval count");
    exp1->add_option("--out", out_path, "report CSV path");
    exp1->add_option("--svg", svg_path, "optional SVG plot");

    std::size_t r_points = 101;
    auto* exp2 = app.add_subcommand("exp-r", "one-step MSE across r with AIC selection");
    exp2->add_option("--x1", x1, "initial condition");
    exp2->add_option("--points", r_points, "r grid resolution over [3,4]");
    exp2->add_option("--n", n, "total samples");
    exp2->add_option("--train", train, "training samples");
    exp2->add_option("--out", out_path, "report CSV path");
    exp2->add_option("--svg", svg_path, "optional SVG plot");

    auto* exp3 = app.add_subcommand("exp-noise", "h-step MSE under measurement noise");
    exp3->add_option("--r", r, "bifurcation parameter");
    exp3->add_option("--points", grid_points, "x1 grid resolution over [0.1,0.9]");
    exp3->add_option("--sigma", sigma, "noise std deviation");
    exp3->add_option("--h", h, "forecast horizon");
    exp3->add_option("--seed", seed, "noise RNG seed");
    exp3->add_option("--n", n, "total samples");
    exp3->add_option("--train", train, "training samples");
    exp3->add_option("--out", out_path, "report CSV path");
    exp3->add_option("--svg", svg_path, "optional SVG plot");

    double r_train = 4.0, rt_min = 3.5, rt_max = 4.0;
    std::size_t rt_points = 51;
    auto* exp4 = app.add_subcommand("exp-mismatch", "h-step MSE under parameter mismatch");
    exp4->add_option("--r-train", r_train, "r used to fit the models");
    exp4->add_option("--x1", x1, "initial condition");
    exp4->add_option("--r-test-min", rt_min, "low end of the test r grid");
    exp4->add_option("--r-test-max", rt_max, "high end of the test r grid");
    exp4->add_option("--points", rt_points, "test r grid resolution");
    exp4->add_option("--h", h, "forecast horizon");
    exp4->add_option("--n", n, "total samples");
    exp4->add_option("--train", train, "training samples");
    exp4->add_option("--out", out_path, "report CSV path");
    exp4->add_option("--svg", svg_path, "optional SVG plot");

    std::size_t n_lo = 2, n_hi = 25;
    auto* exp5 = app.add_subcommand("exp-intervals", "one-step FTS MSE across interval counts");
    exp5->add_option("--r", r, "bifurcation parameter");
    exp5->add_option("--x1", x1, "initial condition");
    exp5->add_option("--n-min", n_lo, "smallest interval count");
    exp5->add_option("--n-max", n_hi, "largest interval count");
    exp5->add_option("--n", n, "total samples");
    exp5->add_option("--train", train, "training samples");
    exp5->add_option("--out", out_path, "report CSV path");
    exp5->add_option("--svg", svg_path, "optional SVG plot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*gen) {
            fts::TimeSeries series = fts::generate({r, x1, n});
            if (sigma > 0.0) series = fts::add_noise(series, sigma, seed);
            auto out = fts::open_output(resolve(out_path, "series.csv"));
            fts::write_series_csv(out, series);
        } else if (*acf_cmd) {
            const auto result = fts::acf(fts::generate({r, x1, n}), max_lag);
            auto out = fts::open_output(resolve(out_path, "acf.csv"));
            fts::write_acf_csv(out, result);
        } else if (*bif) {
            const auto pts = fts::bifurcation_scan(r_min, r_max, r_steps, transient, keep);
            auto out = fts::open_output(resolve(out_path, "bifurcation.csv"));
            fts::write_bifurcation_csv(out, pts);
            if (!svg_path.empty()) {
                fts::SvgPlot plot("bifurcation diagram");
                std::vector<double> xs, ys;
                xs.reserve(pts.size());
                ys.reserve(pts.size());
                for (const auto& p : pts) { xs.push_back(p.r); ys.push_back(p.x); }
                plot.add_scatter(xs, ys, "black");
                auto svg = fts::open_output(svg_path);
                plot.render(svg);
            }
        } else if (*fit_cmd) {
            const fts::TimeSeries series = fts::generate({r, x1, n});
            const fts::Interval universe{u_lo, u_hi};
            std::size_t count = intervals;
            switch (parse_selection(selection)) {
                case fts::IntervalSelection::aic:
                    count = fts::select_intervals_aic(series, universe).n_star;
                    break;
                case fts::IntervalSelection::average:
                    count = fts::average_based_length(series, universe).intervals;
                    break;
                case fts::IntervalSelection::fixed:
                    break;
            }
            const fts::FtsModel model = fts::fit(series, fts::uniform_partition(universe, count));
            fts::save_model(resolve(model_path, "model.fts"), model);
            std::cout << "fitted " << count << " intervals, "
                      << model.groups.size() << " relationship groups\n";
        } else if (*fc) {
            const fts::FtsModel model = fts::load_model(model_path);
            const auto out = fts::forecast_h(model, x0, h);
            std::cout << fts::format_double(out.value)
                      << (out.fallback ? " (persistence fallback)" : "") << '\n';
        } else if (*aic_scan) {
            const auto sel = fts::select_intervals_aic(fts::generate({r, x1, n}),
                                                       fts::Interval{u_lo, u_hi});
            auto out = fts::open_output(resolve(out_path, "aic_curve.csv"));
            fts::write_aic_curve_csv(out, sel);
            std::cout << "selected n = " << sel.n_star << '\n';
        } else if (*exp1) {
            const auto report = fts::sweep_initial_condition(
                r, fts::linspace(0.1, 0.9, grid_points), {n, train}, intervals);
            write_report(report, resolve(out_path, "exp_initial.csv"), svg_path);
        } else if (*exp2) {
            const auto report = fts::sweep_r(x1, fts::linspace(3.0, 4.0, r_points), {n, train});
            write_report(report, resolve(out_path, "exp_r.csv"), svg_path);
        } else if (*exp3) {
            const auto report = fts::noise_experiment(
                r, fts::linspace(0.1, 0.9, grid_points), sigma, h, seed, {n, train});
            write_report(report, resolve(out_path, "exp_noise.csv"), svg_path);
        } else if (*exp4) {
            const auto report = fts::mismatch_experiment(
                r_train, fts::linspace(rt_min, rt_max, rt_points), x1, h, {n, train});
            write_report(report, resolve(out_path, "exp_mismatch.csv"), svg_path);
        } else if (*exp5) {
            std::vector<std::size_t> grid;
            for (std::size_t i = n_lo; i <= n_hi; ++i) grid.push_back(i);
            const auto report = fts::interval_count_scan(r, x1, grid, {n, train});
            write_report(report, resolve(out_path, "exp_intervals.csv"), svg_path);
        }
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 2;
    }
    return 0;
}
