#include "andopt/algorithm.hpp"
#include "andopt/selection.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace andopt;

namespace {

std::vector<std::vector<double>> rows_of(const Population& p) { return p.objectives().to_rows(); }

} // namespace

TEST_CASE("selection identity when the union already fits") {
    const Population u = Population::from_objectives({{0.1, 0.9}, {0.5, 0.5}, {0.9, 0.1}});
    CHECK(rows_of(environmental_selection(u, 3)) == rows_of(u));
    CHECK(rows_of(selection_woa(u, 5)) == rows_of(u));
    CHECK(rows_of(selection_wod(u, 3)) == rows_of(u));
    CHECK_THROWS(environmental_selection(u, 0));
    CHECK_THROWS(selection_woa(Population{}, 2));
}

TEST_CASE("identical pair keeps the second copy") {
    const Population u = Population::from_objectives({{0.4, 0.6}, {0.4, 0.6}});
    const PointSet pts = u.objectives();
    CHECK(select_and(pts, 1) == std::vector<std::size_t>{1});
    CHECK(environmental_selection(u, 1).size() == 1);
}

TEST_CASE("three-point example matches the oracle") {
    const oracle::Set pts{{1.0, 0.0}, {0.9, 0.1}, {0.0, 1.0}};
    const auto got = select_and(oracle::to_points(pts), 2);
    CHECK(got == oracle::prune(pts, 2, oracle::Rule::Density, std::nullopt));
    REQUIRE(got.size() == 2);
    CHECK(got.back() == 2); // (0, 1) is never part of the closest pair
}

TEST_CASE("WoD removes the farther member of a collinear pair") {
    const PointSet pts({{0.0, 1.0}, {0.5, 0.5}, {0.9, 0.9}, {1.0, 0.0}});
    // The frame spans [0, 1] on both axes, so the points are already normalized.
    CHECK(select_wod(pts, 3) == std::vector<std::size_t>{0, 1, 3});
}

TEST_CASE("WoA drops duplicates first") {
    const PointSet pts({{0.2, 0.8}, {0.2, 0.8}, {0.9, 0.1}});
    const auto got = select_woa(pts, 2);
    CHECK(got.size() == 2);
    CHECK(got.back() == 2);
}

TEST_CASE("selectors agree with the naive executors") {
    RandomSource rng(77);
    for (int t = 0; t < 400; ++t) {
        const std::size_t size = 2 + rng.index(11);
        const std::size_t m = 2 + rng.index(4);
        const std::size_t n = 1 + rng.index(std::min<std::size_t>(8, size));
        const auto pts = oracle::random_set(rng, size, m);
        const PointSet ps = oracle::to_points(pts);
        std::optional<std::size_t> k;
        if (rng.coin()) {
            k = 1 + rng.index(3);
        }
        SdeParams sde;
        sde.k = k;
        CAPTURE(t);
        CHECK(select_and(ps, n, sde) == oracle::prune(pts, n, oracle::Rule::Density, k));
        CHECK(select_wod(ps, n) == oracle::prune(pts, n, oracle::Rule::Distance, k));
        CHECK(select_woa(ps, n, sde) == oracle::woa(pts, n, k));
    }
}

TEST_CASE("selection invariants") {
    RandomSource rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto pts = oracle::random_set(rng, 30, 3);
        const Population u = Population::from_objectives(pts);
        const Population out = environmental_selection(u, 10);
        CHECK(out.size() == 10);
        CHECK(out.capacity == 10);
        // Survivors are unmodified input members.
        for (const auto& ind : out.members) {
            CHECK(std::find(pts.begin(), pts.end(), ind.f) != pts.end());
        }
        CHECK(rows_of(environmental_selection(u, 10)) == rows_of(out));
    }
}

TEST_CASE("at most one copy of a duplicate pair survives") {
    RandomSource rng(8);
    for (int t = 0; t < 100; ++t) {
        auto pts = oracle::random_set(rng, 9, 3);
        pts[7] = pts[2];
        // Only meaningful when the copies are the unique zero-angle pair.
        const auto z = oracle::normalize_union(pts);
        bool other_zero = false;
        for (std::size_t a = 0; a < z.size(); ++a) {
            for (std::size_t b = a + 1; b < z.size(); ++b) {
                if (!(a == 2 && b == 7) && oracle::angle(z[a], z[b]) < 1e-6) {
                    other_zero = true;
                }
            }
        }
        if (other_zero) {
            continue;
        }
        const auto got = select_and(oracle::to_points(pts), 8);
        const bool both = std::find(got.begin(), got.end(), 2) != got.end() &&
                          std::find(got.begin(), got.end(), 7) != got.end();
        CHECK_FALSE(both);
    }
}

TEST_CASE("constrained selection") {
    auto make = [](const std::vector<double>& cvs) {
        Population p;
        for (std::size_t i = 0; i < cvs.size(); ++i) {
            Individual ind;
            ind.f = {static_cast<double>(i) / 10.0, 1.0 - static_cast<double>(i) / 10.0};
            ind.cv = cvs[i];
            p.members.push_back(ind);
        }
        p.capacity = cvs.size();
        return p;
    };

    SUBCASE("all feasible equals unconstrained selection") {
        const Population u = make({0, 0, 0, 0, 0, 0});
        CHECK(rows_of(constrained_environmental_selection(u, 3)) == rows_of(environmental_selection(u, 3)));
    }
    SUBCASE("feasible members survive, then smallest violations") {
        const Population u = make({0.5, 0.0, 0.2, 0.9, 0.0, 0.1});
        const Population out = constrained_environmental_selection(u, 4);
        REQUIRE(out.size() == 4);
        std::vector<double> cvs;
        for (const auto& ind : out.members) {
            cvs.push_back(*ind.cv);
        }
        CHECK(cvs == std::vector<double>{0.0, 0.2, 0.0, 0.1});
    }
    SUBCASE("distinct violations keep the three smallest") {
        const Population u = make({0.6, 0.3, 0.5, 0.1, 0.4, 0.2});
        const Population out = constrained_environmental_selection(u, 3);
        std::vector<double> cvs;
        for (const auto& ind : out.members) {
            cvs.push_back(*ind.cv);
        }
        CHECK(cvs == std::vector<double>{0.3, 0.1, 0.2});
    }
    SUBCASE("equal violations keep the earlier member") {
        const Population u = make({0.3, 0.3, 0.3});
        const Population out = constrained_environmental_selection(u, 2);
        CHECK(out[0].f == u[0].f);
        CHECK(out[1].f == u[1].f);
    }
}

TEST_CASE("constraint violation") {
    CHECK(constraint_violation(std::vector<double>{-1.0, 0.0}, {}) == 0.0);
    CHECK(constraint_violation(std::vector<double>{2.0, -1.0}, {}) == 2.0);
    CHECK(constraint_violation(std::vector<double>{0.5}, std::vector<double>{-0.25}) == 0.75);
}
