#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fts/chaos.hpp"

namespace fts {

struct Interval {
    double a;
    double b;

    double midpoint() const { return (a + b) / 2.0; }
    double length() const { return b - a; }
};

/// Equal-length partition of the universe of discourse. One trapezoidal fuzzy
/// set per interval.
struct PartitionScheme {
    Interval universe{0.0, 1.0};
    std::vector<Interval> intervals;

    std::size_t n() const { return intervals.size(); }

    std::vector<double> midpoints() const {
        std::vector<double> m;
        m.reserve(intervals.size());
        for (const auto& iv : intervals) m.push_back(iv.midpoint());
        return m;
    }
};

using MembershipVector = std::vector<double>;

struct FuzzifiedSeries {
    std::vector<MembershipVector> vectors;
    std::vector<std::size_t> labels;  // argmax index, lowest index on ties
    PartitionScheme scheme;

    std::size_t size() const { return vectors.size(); }
};

inline PartitionScheme uniform_partition(Interval universe, std::size_t n) {
    if (!(universe.a < universe.b))
        throw std::invalid_argument("uniform_partition: universe must satisfy a < b");
    if (n < 2)
        throw std::invalid_argument("uniform_partition: need at least 2 intervals");
    PartitionScheme scheme;
    scheme.universe = universe;
    scheme.intervals.reserve(n);
    const double span = universe.b - universe.a;
    double lo = universe.a;
    for (std::size_t i = 0; i < n; ++i) {
        const double hi = (i + 1 == n)
            ? universe.b
            : universe.a + span * static_cast<double>(i + 1) / static_cast<double>(n);
        scheme.intervals.push_back({lo, hi});
        lo = hi;
    }
    return scheme;
}

/// Trapezoidal membership for the fuzzy set on [a,b]: flat top over the
/// interval, linear ramps reaching zero at 2a-b and 2b-a.
inline double membership(const Interval& iv, double x) {
    const double a = iv.a, b = iv.b, w = iv.b - iv.a;
    if (x <= 2.0 * a - b) return 0.0;
    if (x < a) return (x - 2.0 * a + b) / w;
    if (x <= b) return 1.0;
    if (x < 2.0 * b - a) return (2.0 * b - a - x) / w;
    return 0.0;
}

/// Membership degrees of a single observation in every fuzzy set.
/// Throws when x is outside every support (all-zero vector).
inline MembershipVector fuzzify_value(double x, const PartitionScheme& scheme) {
    MembershipVector degrees;
    degrees.reserve(scheme.n());
    bool any = false;
    for (const auto& iv : scheme.intervals) {
        const double mu = membership(iv, x);
        if (mu > 0.0) any = true;
        degrees.push_back(mu);
    }
    if (!any)
        throw std::domain_error("fuzzify_value: observation outside every fuzzy set support");
    return degrees;
}

inline std::size_t argmax_label(const MembershipVector& degrees) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < degrees.size(); ++i)
        if (degrees[i] > degrees[best]) best = i;
    return best;
}

inline FuzzifiedSeries fuzzify(const TimeSeries& series, const PartitionScheme& scheme) {
    FuzzifiedSeries fz;
    fz.scheme = scheme;
    fz.vectors.reserve(series.size());
    fz.labels.reserve(series.size());
    for (double x : series.values) {
        fz.vectors.push_back(fuzzify_value(x, scheme));
        fz.labels.push_back(argmax_label(fz.vectors.back()));
    }
    return fz;
}

struct AverageBasedResult {
    double length;          // interval length after rounding to the base
    std::size_t intervals;  // ceil(universe span / length)
    double half_average;    // half the mean absolute first difference
    double base;            // power-of-ten rounding base
};

/// Average-based interval length: half the mean absolute first difference,
/// rounded to the nearest multiple (ties up) of the base 10^m where
/// 10^m < half-average <= 10^{m+1}.
inline AverageBasedResult average_based_length(const TimeSeries& series,
                                               Interval universe) {
    if (series.size() < 2)
        throw std::invalid_argument("average_based_length: need at least 2 samples");
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < series.size(); ++k)
        sum += std::abs(series.values[k + 1] - series.values[k]);
    const double mu = 0.5 * sum / static_cast<double>(series.size() - 1);
    if (mu == 0.0)
        throw std::domain_error("average_based_length: constant series");
    // strict lower bound: an exact power of ten belongs to the lower decade
    int m = static_cast<int>(std::floor(std::log10(mu)));
    if (std::pow(10.0, m) >= mu) --m;
    const double base = std::pow(10.0, m);
    double length = base * std::floor(mu / base + 0.5);
    if (length <= 0.0) length = base;
    const auto n = static_cast<std::size_t>(
        std::ceil((universe.b - universe.a) / length));
    return {length, n, mu, base};
}

inline AverageBasedResult average_based_length(const TimeSeries& series) {
    const auto [lo, hi] = std::minmax_element(series.values.begin(), series.values.end());
    return average_based_length(series, Interval{*lo, *hi});
}

/// AIC(n) = N ln(RSS/N) + 2n. A vanishing RSS is clamped at 1e-300.
inline double aic(double rss, std::size_t n_samples, std::size_t n_intervals) {
    if (n_samples < 1 || n_intervals < 1)
        throw std::invalid_argument("aic: N and n must be >= 1");
    rss = std::max(rss, 1e-300);
    const auto N = static_cast<double>(n_samples);
    return N * std::log(rss / N) + 2.0 * static_cast<double>(n_intervals);
}

}  // namespace fts
