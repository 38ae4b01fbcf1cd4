#include "andopt/stats.hpp"

#include "andopt/core.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace andopt;
using doctest::Approx;

TEST_CASE("midranks") {
    const std::vector<double> v{3.0, 1.0, 3.0, 2.0};
    CHECK(midranks(v) == std::vector<double>{3.5, 1.0, 3.5, 2.0});
}

TEST_CASE("rank-sum statistic") {
    const std::vector<double> a{1, 2, 3, 4};
    const std::vector<double> b{5, 6, 7, 8};
    const auto r = wilcoxon_rank_sum(a, b);
    CHECK(r.statistic == 10.0);
    // z = (|10 - 18| - 0.5) / sqrt(16 * 9 / 12)
    CHECK(std::abs(r.z) == Approx(7.5 / std::sqrt(12.0)));
    CHECK(r.p_value == Approx(std::erfc(7.5 / std::sqrt(12.0) / std::sqrt(2.0))));
}

TEST_CASE("identical samples are similar") {
    const std::vector<double> a{0.3, 0.1, 0.2, 0.5};
    auto r = wilcoxon_rank_sum(a, a);
    CHECK(r.outcome == Outcome::Similar);
    CHECK(r.p_value == 1.0);
    const std::vector<double> flat{1.0, 1.0, 1.0};
    r = wilcoxon_rank_sum(flat, flat);
    CHECK(r.outcome == Outcome::Similar);
    CHECK(r.p_value == 1.0);
    CHECK_THROWS(wilcoxon_rank_sum(std::vector<double>{1.0}, a));
}

TEST_CASE("separated samples and symmetry") {
    RandomSource rng(4);
    std::vector<double> low(20);
    std::vector<double> high(20);
    for (std::size_t i = 0; i < 20; ++i) {
        low[i] = rng.uniform();
        high[i] = 100.0 + rng.uniform();
    }
    const auto ab = wilcoxon_rank_sum(low, high);
    const auto ba = wilcoxon_rank_sum(high, low);
    CHECK(ab.outcome == Outcome::Better);
    CHECK(ba.outcome == Outcome::Worse);
    CHECK(ab.p_value == Approx(ba.p_value));
    CHECK(ab.p_value < 1e-6);
    CHECK(wilcoxon_rank_sum(low, high, 0.05, false).outcome == Outcome::Worse);
    CHECK(to_string(Outcome::Similar) == "similar");
}

TEST_CASE("Friedman mean ranks") {
    const std::vector<std::vector<double>> dominated{{1, 2, 3}, {0.1, 0.5, 0.2}, {4, 9, 5}};
    auto r = friedman_ranks(dominated);
    CHECK(r.mean_ranks[0] == 1.0);

    r = friedman_ranks({{1, 1}, {2, 2}});
    CHECK(r.mean_ranks == std::vector<double>{1.5, 1.5});

    // Row 1 ranks (2, 1, 3); row 2 with a tie ranks (1.5, 3, 1.5).
    r = friedman_ranks({{0.5, 0.2, 0.9}, {0.1, 0.4, 0.1}});
    CHECK(r.mean_ranks[0] == Approx(1.75));
    CHECK(r.mean_ranks[1] == Approx(2.0));
    CHECK(r.mean_ranks[2] == Approx(2.25));
    const double total = std::accumulate(r.mean_ranks.begin(), r.mean_ranks.end(), 0.0);
    CHECK(total == Approx(6.0));

    r = friedman_ranks({{0.5, 0.2, 0.9}}, false);
    CHECK(r.mean_ranks == std::vector<double>{2.0, 3.0, 1.0});
    CHECK_THROWS(friedman_ranks({}));
    CHECK_THROWS(friedman_ranks({{1.0}}));
}
