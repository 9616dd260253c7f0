#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fts/partition.hpp"

namespace fts {

/// A fuzzy logical relationship A_lhs -> A_rhs observed between consecutive
/// samples.
struct Relationship {
    std::size_t lhs;
    std::size_t rhs;

    friend bool operator==(const Relationship&, const Relationship&) = default;
};

/// Relationships sharing a left-hand side, rhs kept sorted.
using RelationshipGroups = std::map<std::size_t, std::vector<std::size_t>>;

using RelationMatrix = std::vector<std::vector<double>>;

struct FtsModel {
    PartitionScheme scheme;
    RelationshipGroups groups;
    std::map<std::size_t, MembershipVector> representatives;
    RelationMatrix relation;  // union (elementwise max) of per-relationship matrices
    std::vector<double> midpoints;

    std::size_t n() const { return scheme.n(); }
};

/// One relationship per consecutive pair of labels, deduplicated in
/// first-occurrence order.
inline std::vector<Relationship> extract_relationships(const FuzzifiedSeries& fz) {
    if (fz.size() < 2)
        throw std::invalid_argument("extract_relationships: need at least 2 samples");
    std::vector<Relationship> rels;
    for (std::size_t k = 0; k + 1 < fz.size(); ++k) {
        Relationship r{fz.labels[k], fz.labels[k + 1]};
        if (std::find(rels.begin(), rels.end(), r) == rels.end())
            rels.push_back(r);
    }
    return rels;
}

inline RelationshipGroups group_relationships(const std::vector<Relationship>& rels) {
    RelationshipGroups groups;
    for (const auto& r : rels) {
        auto& rhs = groups[r.lhs];
        if (std::find(rhs.begin(), rhs.end(), r.rhs) == rhs.end())
            rhs.push_back(r.rhs);
    }
    for (auto& [lhs, rhs] : groups) std::sort(rhs.begin(), rhs.end());
    return groups;
}

/// Membership vector of the earliest sample labeled i.
inline MembershipVector representative_vector(const FuzzifiedSeries& fz, std::size_t i) {
    for (std::size_t k = 0; k < fz.size(); ++k)
        if (fz.labels[k] == i) return fz.vectors[k];
    throw std::runtime_error("representative_vector: no sample labeled with the requested set");
}

/// D = C^T x B with d_ij = min(c_i, b_j).
inline RelationMatrix min_outer(const MembershipVector& c, const MembershipVector& b) {
    if (c.size() != b.size())
        throw std::invalid_argument("min_outer: vector lengths differ");
    RelationMatrix d(c.size(), std::vector<double>(b.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            d[i][j] = std::min(c[i], b[j]);
    return d;
}

/// Fit a first-order FTS model: fuzzify, extract relationships, and union
/// (elementwise max) the min-outer matrices built from representative vectors.
inline FtsModel fit(const TimeSeries& series, const PartitionScheme& scheme) {
    FtsModel model;
    model.scheme = scheme;
    model.midpoints = scheme.midpoints();

    const FuzzifiedSeries fz = fuzzify(series, scheme);
    const auto rels = extract_relationships(fz);
    model.groups = group_relationships(rels);

    const std::size_t n = scheme.n();
    model.relation.assign(n, std::vector<double>(n, 0.0));
    for (const auto& rel : rels) {
        for (std::size_t side : {rel.lhs, rel.rhs})
            if (!model.representatives.count(side))
                model.representatives.emplace(side, representative_vector(fz, side));
        const RelationMatrix rk = min_outer(model.representatives.at(rel.lhs),
                                            model.representatives.at(rel.rhs));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                model.relation[i][j] = std::max(model.relation[i][j], rk[i][j]);
    }
    return model;
}

/// Max-min composition: out[j] = max_i min(a[i], R[i][j]).
inline MembershipVector forecast_fuzzy(const MembershipVector& a, const RelationMatrix& r) {
    if (a.size() != r.size())
        throw std::invalid_argument("forecast_fuzzy: dimension mismatch");
    const std::size_t n = a.size();
    MembershipVector out(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double best = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            best = std::max(best, std::min(a[i], r[i][j]));
        out[j] = best;
    }
    return out;
}

/// Crisp value from a fuzzy forecast vector:
///   1. unique maximum -> midpoint of its interval
///   2. maxima on adjacent intervals -> midpoint of the merged span
///   3. otherwise -> centroid of interval midpoints weighted by the
///      normalized vector
/// Adjacency is geometric (shared interval bound), so consistent relabeling
/// of the scheme leaves the result unchanged.
inline double defuzzify(const MembershipVector& a, const PartitionScheme& scheme) {
    if (a.size() != scheme.n())
        throw std::invalid_argument("defuzzify: dimension mismatch");
    double peak = 0.0;
    for (double v : a) peak = std::max(peak, v);
    if (peak <= 0.0)
        throw std::domain_error("defuzzify: all-zero forecast vector");

    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] == peak) maxima.push_back(i);
    std::sort(maxima.begin(), maxima.end(), [&](std::size_t i, std::size_t j) {
        return scheme.intervals[i].a < scheme.intervals[j].a;
    });

    if (maxima.size() == 1)
        return scheme.intervals[maxima.front()].midpoint();

    bool contiguous = true;
    for (std::size_t k = 0; k + 1 < maxima.size(); ++k)
        if (scheme.intervals[maxima[k]].b != scheme.intervals[maxima[k + 1]].a)
            contiguous = false;
    if (contiguous)
        return (scheme.intervals[maxima.front()].a + scheme.intervals[maxima.back()].b) / 2.0;

    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        num += a[j] * scheme.intervals[j].midpoint();
        den += a[j];
    }
    return num / den;
}

struct ForecastOutcome {
    double value;
    bool fallback;  // persistence was used (no usable fuzzy transition)
};

/// One-step crisp forecast. Falls back to persistence (returns x) when x is
/// outside every fuzzy support or the composed vector is all zero.
inline ForecastOutcome forecast_one(const FtsModel& model, double x) {
    MembershipVector a;
    try {
        a = fuzzify_value(x, model.scheme);
    } catch (const std::domain_error&) {
        return {x, true};
    }
    const MembershipVector composed = forecast_fuzzy(a, model.relation);
    const bool empty = std::all_of(composed.begin(), composed.end(),
                                   [](double v) { return v == 0.0; });
    if (empty) return {x, true};
    return {defuzzify(composed, model.scheme), false};
}

/// h-step forecast, defuzzifying and refuzzifying at every step.
inline ForecastOutcome forecast_h(const FtsModel& model, double x, std::size_t h) {
    if (h < 1)
        throw std::invalid_argument("forecast_h: h must be >= 1");
    bool any_fallback = false;
    double v = x;
    for (std::size_t step = 0; step < h; ++step) {
        const ForecastOutcome out = forecast_one(model, v);
        v = out.value;
        any_fallback = any_fallback || out.fallback;
    }
    return {v, any_fallback};
}

}  // namespace fts
