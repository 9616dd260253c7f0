#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace fts {

/// Parameters of a logistic-map trajectory: x_{k+1} = r * x_k * (1 - x_k).
struct MapConfig {
    double r = 3.999;
    double x1 = 0.1;
    std::size_t n = 1000;
};

struct TimeSeries {
    std::vector<double> values;
    std::optional<MapConfig> meta;
    std::optional<double> noise_sigma;
    std::optional<std::uint64_t> seed;

    std::size_t size() const { return values.size(); }
    double operator[](std::size_t k) const { return values[k]; }
};

struct AcfResult {
    std::vector<double> correlations;  // indexed by lag, correlations[0] == 1
    double significance_bound = 0.0;   // 1.96 / sqrt(N)
};

/// One application of the logistic recurrence. The product is evaluated as
/// r * (x * (1 - x)) so trajectories are bit-reproducible; the build disables
/// FMA contraction.
inline double logistic_step(double x, double r) {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::invalid_argument("logistic_step: x must be in [0,1]");
    if (!(r >= 0.0 && r <= 4.0))
        throw std::invalid_argument("logistic_step: r must be in [0,4]");
    const double p = x * (1.0 - x);
    return r * p;
}

inline void validate(const MapConfig& cfg) {
    if (!(cfg.r >= 0.0 && cfg.r <= 4.0))
        throw std::invalid_argument("MapConfig: r must be in [0,4]");
    if (!(cfg.x1 >= 0.0 && cfg.x1 <= 1.0))
        throw std::invalid_argument("MapConfig: x1 must be in [0,1]");
    if (cfg.n < 1)
        throw std::invalid_argument("MapConfig: n must be >= 1");
}

/// Iterate the map from cfg.x1 for cfg.n samples (the first sample is x1).
inline TimeSeries generate(const MapConfig& cfg) {
    validate(cfg);
    TimeSeries out;
    out.meta = cfg;
    out.values.reserve(cfg.n);
    double x = cfg.x1;
    out.values.push_back(x);
    for (std::size_t k = 1; k < cfg.n; ++k) {
        x = logistic_step(x, cfg.r);
        out.values.push_back(x);
    }
    return out;
}

/// Add i.i.d. Gaussian measurement noise N(0, sigma^2). Same seed, same output.
inline TimeSeries add_noise(const TimeSeries& series, double sigma, std::uint64_t seed) {
    if (sigma < 0.0)
        throw std::invalid_argument("add_noise: sigma must be >= 0");
    TimeSeries out = series;
    out.noise_sigma = sigma;
    out.seed = seed;
    if (sigma == 0.0) return out;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    for (double& v : out.values) v += noise(rng);
    return out;
}

/// Mean-removed sample autocorrelation for lags 0..max_lag.
inline AcfResult acf(const TimeSeries& series, std::size_t max_lag) {
    const std::size_t n = series.size();
    if (n <= max_lag)
        throw std::invalid_argument("acf: series length must exceed max_lag");
    const bool constant = std::all_of(series.values.begin(), series.values.end(),
                                      [&](double v) { return v == series.values.front(); });
    if (constant)
        throw std::domain_error("acf: constant series has zero variance");
    double mean = 0.0;
    for (double v : series.values) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : series.values) var += (v - mean) * (v - mean);
    AcfResult res;
    res.significance_bound = 1.96 / std::sqrt(static_cast<double>(n));
    res.correlations.reserve(max_lag + 1);
    for (std::size_t lag = 0; lag <= max_lag; ++lag) {
        double num = 0.0;
        for (std::size_t k = 0; k + lag < n; ++k)
            num += (series.values[k] - mean) * (series.values[k + lag] - mean);
        res.correlations.push_back(num / var);
    }
    return res;
}

struct BifurcationPoint {
    double r;
    double x;
};

/// Sample the attractor on a uniform r grid: iterate from x1, drop `transient`
/// steps, keep the next `keep` values per grid point.
inline std::vector<BifurcationPoint> bifurcation_scan(double r_min, double r_max,
                                                      std::size_t r_steps,
                                                      std::size_t transient,
                                                      std::size_t keep,
                                                      double x1 = 0.5) {
    if (!(r_min >= 0.0 && r_min < r_max && r_max <= 4.0))
        throw std::invalid_argument("bifurcation_scan: need 0 <= r_min < r_max <= 4");
    if (transient < 1 || keep < 1 || r_steps < 1)
        throw std::invalid_argument("bifurcation_scan: transient, keep, r_steps must be >= 1");
    std::vector<BifurcationPoint> pts;
    pts.reserve(r_steps * keep);
    for (std::size_t i = 0; i < r_steps; ++i) {
        const double t = (r_steps == 1) ? 0.0
                         : static_cast<double>(i) / static_cast<double>(r_steps - 1);
        const double r = r_min + t * (r_max - r_min);
        double x = x1;
        for (std::size_t k = 0; k < transient; ++k) x = logistic_step(x, r);
        for (std::size_t k = 0; k < keep; ++k) {
            x = logistic_step(x, r);
            pts.push_back({r, x});
        }
    }
    return pts;
}

}  // namespace fts
