#include <doctest.h>

#include <random>

#include "fts/model.hpp"

using namespace fts;

namespace {

/// Hand-worked 7-set pertinence table used across these tests.
FuzzifiedSeries table_fixture() {
    FuzzifiedSeries fz;
    fz.scheme = uniform_partition({0.0, 1.0}, 7);
    fz.vectors = {
        {0.6, 1.0, 0.4, 0.0, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.5, 1.0, 0.5, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.6, 1.0},
        {0.0, 0.8, 1.0, 0.2, 0.0, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.9, 1.0},
        {0.0, 0.0, 0.7, 1.0, 0.3, 0.0, 0.0},
        {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0},
        {1.0, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0},
        {1.0, 0.2, 0.0, 0.0, 0.0, 0.0, 0.0},
        {1.0, 0.8, 0.0, 0.0, 0.0, 0.0, 0.0},
    };
    for (const auto& v : fz.vectors) fz.labels.push_back(argmax_label(v));
    return fz;
}

MembershipVector one_hot(std::size_t n, std::size_t i) {
    MembershipVector v(n, 0.0);
    v[i] = 1.0;
    return v;
}

}  // namespace

TEST_CASE("extract_relationships dedupes in first-occurrence order") {
    const FuzzifiedSeries fz = table_fixture();
    const auto rels = extract_relationships(fz);
    REQUIRE(!rels.empty());
    CHECK(rels[0] == Relationship{1, 4});  // A2 -> A5 from rows 1 and 2
    // rows 8..10 all label A1: the self relationship appears once
    std::size_t self_count = 0;
    for (const auto& r : rels)
        if (r == Relationship{0, 0}) ++self_count;
    CHECK(self_count == 1);
}

TEST_CASE("constant series yields a single self relationship") {
    TimeSeries s;
    s.values.assign(5, 0.1);
    const FuzzifiedSeries fz = fuzzify(s, uniform_partition({0.0, 1.0}, 5));
    const auto rels = extract_relationships(fz);
    REQUIRE(rels.size() == 1);
    CHECK(rels[0] == Relationship{0, 0});
}

TEST_CASE("group_relationships") {
    CHECK(group_relationships({{0, 1}, {0, 2}}) == RelationshipGroups{{0, {1, 2}}});
    CHECK(group_relationships({}).empty());
    // rhs sorted regardless of arrival order, duplicates collapse
    const auto groups = group_relationships({{3, 6}, {3, 2}, {3, 6}, {1, 0}});
    CHECK(groups.at(3) == std::vector<std::size_t>{2, 6});
    CHECK(groups.at(1) == std::vector<std::size_t>{0});
}

TEST_CASE("grouped pairs equal the deduplicated relationship set") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::size_t> idx(0, 6);
    for (int c = 0; c < 100; ++c) {
        std::vector<Relationship> rels;
        for (int k = 0; k < 20; ++k) rels.push_back({idx(rng), idx(rng)});
        const auto groups = group_relationships(rels);
        std::size_t grouped_pairs = 0;
        for (const auto& [lhs, rhs] : groups) grouped_pairs += rhs.size();
        std::vector<Relationship> dedup;
        for (const auto& r : rels)
            if (std::find(dedup.begin(), dedup.end(), r) == dedup.end()) dedup.push_back(r);
        CHECK(grouped_pairs == dedup.size());
        for (const auto& r : dedup) {
            const auto& rhs = groups.at(r.lhs);
            CHECK(std::find(rhs.begin(), rhs.end(), r.rhs) != rhs.end());
        }
    }
}

TEST_CASE("representative_vector picks the earliest sample") {
    const FuzzifiedSeries fz = table_fixture();
    CHECK(representative_vector(fz, 1) == fz.vectors[0]);  // A2 from row 1
    CHECK(representative_vector(fz, 6) == fz.vectors[2]);  // A7 from row 3, not 5 or 7
    CHECK_THROWS_AS(representative_vector(fz, 5), std::runtime_error);  // A6 never a label
}

TEST_CASE("min_outer") {
    SUBCASE("one-hot times one-hot") {
        const auto d = min_outer(one_hot(4, 1), one_hot(4, 3));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                CHECK(d[i][j] == ((i == 1 && j == 3) ? 1.0 : 0.0));
    }
    SUBCASE("worked 2x2") {
        const auto d = min_outer({1.0, 0.5}, {0.3, 1.0});
        CHECK(d[0][0] == 0.3);
        CHECK(d[0][1] == 1.0);
        CHECK(d[1][0] == 0.3);
        CHECK(d[1][1] == 0.5);
    }
    SUBCASE("all ones") {
        const auto d = min_outer({1.0, 1.0, 1.0}, {1.0, 1.0, 1.0});
        for (const auto& row : d)
            for (double v : row) CHECK(v == 1.0);
    }
    SUBCASE("length mismatch") {
        CHECK_THROWS_AS(min_outer({1.0}, {1.0, 0.5}), std::invalid_argument);
    }
}

TEST_CASE("fit on a constant series unions a single self matrix") {
    TimeSeries s;
    s.values = {0.1, 0.1, 0.1};
    const PartitionScheme scheme = uniform_partition({0.0, 1.0}, 5);
    const FtsModel model = fit(s, scheme);
    const MembershipVector v = fuzzify_value(0.1, scheme);
    CHECK(model.relation == min_outer(v, v));
    CHECK(model.groups == RelationshipGroups{{0, {0}}});
}

TEST_CASE("fit counts relationships and keeps representatives peaked at their set") {
    const TimeSeries s = generate({3.999, 0.1, 100});
    const PartitionScheme scheme = uniform_partition({0.0, 1.0}, 7);
    const FtsModel model = fit(s, scheme);
    for (const auto& [i, v] : model.representatives) CHECK(argmax_label(v) == i);
    std::size_t pairs = 0;
    for (const auto& [lhs, rhs] : model.groups) pairs += rhs.size();
    CHECK(pairs >= 7);  // every observed state has at least one transition
    for (const auto& row : model.relation)
        for (double v : row) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
}

TEST_CASE("forecast_fuzzy max-min composition") {
    const RelationMatrix r = {{0.3, 1.0}, {0.3, 0.5}};
    SUBCASE("one-hot extracts a row") {
        CHECK(forecast_fuzzy({1.0, 0.0}, r) == MembershipVector{0.3, 1.0});
        CHECK(forecast_fuzzy({0.0, 1.0}, r) == MembershipVector{0.3, 0.5});
    }
    SUBCASE("identity matrix is the identity") {
        const RelationMatrix eye = {{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}};
        const MembershipVector a = {0.2, 0.9, 0.4};
        CHECK(forecast_fuzzy(a, eye) == a);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(forecast_fuzzy({1.0, 0.0, 0.0}, r), std::invalid_argument);
    }
}

TEST_CASE("defuzzify rules") {
    const PartitionScheme five = uniform_partition({0.0, 1.0}, 5);
    SUBCASE("rule 1: unique maximum") {
        CHECK(defuzzify(one_hot(5, 0), five) == doctest::Approx(0.1).epsilon(1e-15));
    }
    SUBCASE("rule 2: consecutive maxima merge their span") {
        CHECK(defuzzify({1.0, 1.0, 0.0, 0.0, 0.0}, five) == doctest::Approx(0.2).epsilon(1e-15));
        CHECK(defuzzify({0.0, 1.0, 1.0, 1.0, 0.0}, five) == doctest::Approx(0.5).epsilon(1e-15));
    }
    SUBCASE("rule 3: non-consecutive maxima fall back to the centroid") {
        CHECK(defuzzify({1.0, 0.0, 1.0, 0.0, 0.0}, five) == doctest::Approx(0.3).epsilon(1e-15));
    }
    SUBCASE("all-zero vector is an error") {
        CHECK_THROWS_AS(defuzzify({0.0, 0.0, 0.0, 0.0, 0.0}, five), std::domain_error);
    }
}

TEST_CASE("forecast_one") {
    SUBCASE("constant-series model forecasts its own interval midpoint") {
        TimeSeries s;
        s.values.assign(4, 0.1);
        const FtsModel model = fit(s, uniform_partition({0.0, 1.0}, 5));
        const auto out = forecast_one(model, 0.1);
        CHECK_FALSE(out.fallback);
        CHECK(out.value == doctest::Approx(0.1).epsilon(1e-15));
    }
    SUBCASE("unseen state falls back to persistence") {
        TimeSeries s;
        s.values.assign(4, 0.1);
        const FtsModel model = fit(s, uniform_partition({0.0, 1.0}, 5));
        const auto out = forecast_one(model, 0.9);
        CHECK(out.fallback);
        CHECK(out.value == 0.9);
    }
    SUBCASE("out-of-support input falls back to persistence") {
        const FtsModel model = fit(generate({3.999, 0.1, 50}), uniform_partition({0.0, 1.0}, 5));
        const auto out = forecast_one(model, 5.0);
        CHECK(out.fallback);
        CHECK(out.value == 5.0);
    }
}

TEST_CASE("forecast_h") {
    const FtsModel model = fit(generate({3.999, 0.1, 200}), uniform_partition({0.0, 1.0}, 7));
    CHECK(forecast_h(model, 0.3, 1).value == forecast_one(model, 0.3).value);
    CHECK_THROWS_AS(forecast_h(model, 0.3, 0), std::invalid_argument);

    TimeSeries constant;
    constant.values.assign(4, 0.1);
    const FtsModel cm = fit(constant, uniform_partition({0.0, 1.0}, 5));
    const double one = forecast_one(cm, 0.1).value;
    for (std::size_t h = 1; h <= 5; ++h) CHECK(forecast_h(cm, 0.1, h).value == one);
}

namespace {

std::mt19937_64 prop_rng(97);

MembershipVector random_vector(std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    MembershipVector v(n);
    for (double& x : v) x = u(prop_rng);
    return v;
}

RelationMatrix random_matrix(std::size_t n) {
    RelationMatrix r(n);
    for (auto& row : r) row = random_vector(n);
    return r;
}

}  // namespace

TEST_CASE("property: composition is monotone and bounded by column maxima") {
    std::uniform_int_distribution<std::size_t> un(2, 8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = un(prop_rng);
        const RelationMatrix r = random_matrix(n);
        const MembershipVector a = random_vector(n);
        MembershipVector bigger = a;
        for (double& x : bigger) x = std::min(1.0, x + u(prop_rng) * (1.0 - x));
        const MembershipVector out_a = forecast_fuzzy(a, r);
        const MembershipVector out_b = forecast_fuzzy(bigger, r);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(out_a[j] <= out_b[j]);
            double col_max = 0.0;
            for (std::size_t i = 0; i < n; ++i) col_max = std::max(col_max, r[i][j]);
            CHECK(out_a[j] <= col_max);
            CHECK(out_a[j] >= 0.0);
            CHECK(out_a[j] <= 1.0);
        }
    }
}

TEST_CASE("property: union dominates every component and shrinks with fewer pairs") {
    std::uniform_int_distribution<std::size_t> un(2, 6), um(1, 10);
    for (int c = 0; c < 100; ++c) {
        const std::size_t n = un(prop_rng), m = um(prop_rng);
        std::vector<RelationMatrix> parts;
        for (std::size_t k = 0; k < m; ++k)
            parts.push_back(min_outer(random_vector(n), random_vector(n)));
        RelationMatrix full(n, std::vector<double>(n, 0.0));
        RelationMatrix partial = full;
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    full[i][j] = std::max(full[i][j], parts[k][i][j]);
                    if (k + 1 < m) partial[i][j] = std::max(partial[i][j], parts[k][i][j]);
                }
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    CHECK(full[i][j] >= parts[k][i][j]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(partial[i][j] <= full[i][j]);
    }
}

TEST_CASE("property: defuzzified values stay inside the universe") {
    std::uniform_int_distribution<std::size_t> un(2, 12);
    for (int c = 0; c < 200; ++c) {
        const std::size_t n = un(prop_rng);
        const PartitionScheme scheme = uniform_partition({0.0, 1.0}, n);
        MembershipVector a = random_vector(n);
        a[0] = std::max(a[0], 1e-3);  // keep the vector nonzero
        const double v = defuzzify(a, scheme);
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
    }
}

TEST_CASE("property: relabeling intervals consistently leaves forecasts unchanged") {
    std::uniform_int_distribution<std::size_t> un(3, 9);
    std::uniform_real_distribution<double> ux(0.05, 0.95);
    for (int c = 0; c < 100; ++c) {
        const std::size_t n = un(prop_rng);
        const FtsModel model =
            fit(generate({3.99, ux(prop_rng), 60}), uniform_partition({0.0, 1.0}, n));

        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), prop_rng);

        FtsModel shuffled = model;
        for (std::size_t i = 0; i < n; ++i) {
            shuffled.scheme.intervals[perm[i]] = model.scheme.intervals[i];
            for (std::size_t j = 0; j < n; ++j)
                shuffled.relation[perm[i]][perm[j]] = model.relation[i][j];
        }
        shuffled.midpoints = shuffled.scheme.midpoints();
        shuffled.groups.clear();
        for (const auto& [lhs, rhs] : model.groups)
            for (std::size_t r : rhs) shuffled.groups[perm[lhs]].push_back(perm[r]);

        for (int q = 0; q < 5; ++q) {
            const double x = ux(prop_rng);
            // rule-3 centroid sums in index order, so allow summation-order slack
            CHECK(forecast_one(shuffled, x).value ==
                  doctest::Approx(forecast_one(model, x).value).epsilon(1e-12));
        }
    }
}
