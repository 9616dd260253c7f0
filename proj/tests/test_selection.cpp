#include <doctest.h>

#include "fts/selection.hpp"

using namespace fts;

TEST_CASE("select_from_curve: first local minimum under a strict forward test") {
    CHECK(select_from_curve({{2, 5.0}, {3, 3.0}, {4, 4.0}, {5, 1.0}}) == 3);
    CHECK(select_from_curve({{2, 5.0}, {3, 5.0}, {4, 4.0}, {5, 6.0}}) == 4);
}

TEST_CASE("select_from_curve: monotone curve falls back to the global argmin") {
    CHECK(select_from_curve({{2, 5.0}, {3, 4.0}, {4, 3.0}, {5, 2.0}}) == 5);
    CHECK(select_from_curve({{2, 1.0}}) == 2);
    CHECK_THROWS_AS(select_from_curve({}), std::invalid_argument);
}

TEST_CASE("select_from_curve: gaps in the curve break adjacency") {
    // n=4 missing: the 3 -> 5 rise is not a valid forward test
    CHECK(select_from_curve({{2, 5.0}, {3, 3.0}, {5, 4.0}, {6, 6.0}}) == 5);
}

TEST_CASE("AIC selection on the headline chaotic configuration") {
    const TimeSeries s = generate({3.999, 0.1, 100});
    const AicSelection sel = select_intervals_aic(s, Interval{0.0, 1.0});
    CHECK(sel.n_star >= 5);
    CHECK(sel.n_star <= 9);
    REQUIRE(sel.curve.size() >= 2);
    CHECK(sel.curve.front().n_intervals == 2);
    // steep-then-flat shape
    double best = sel.curve.front().aic_value;
    for (const auto& p : sel.curve) best = std::min(best, p.aic_value);
    CHECK(sel.curve.front().aic_value - best > 10.0);
}

TEST_CASE("in_sample_rss is nonnegative and zero only for a perfect model") {
    const TimeSeries s = generate({3.99, 0.2, 100});
    const FtsModel model = fit(s, uniform_partition({0.0, 1.0}, 7));
    CHECK(in_sample_rss(model, s) > 0.0);
}

TEST_CASE("select_intervals_aic validates its range") {
    const TimeSeries s = generate({3.99, 0.2, 50});
    CHECK_THROWS_AS(select_intervals_aic(s, Interval{0.0, 1.0}, 1, 5), std::invalid_argument);
    CHECK_THROWS_AS(select_intervals_aic(s, Interval{0.0, 1.0}, 10, 5), std::invalid_argument);
}
