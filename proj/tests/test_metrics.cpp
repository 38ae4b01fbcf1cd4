#include "andopt/metrics.hpp"
#include "andopt/problems.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace andopt;
using doctest::Approx;

namespace {

PointSet random_front_2d(RandomSource& rng, std::size_t n) {
    PointSet p(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
        p.push_back(std::vector<double>{rng.uniform(0.0, 1.1), rng.uniform(0.0, 1.1)});
    }
    return p;
}

// Union-of-rectangles area by a coordinate grid over all distinct edges.
double grid_area(const PointSet& p, double r) {
    std::vector<double> xs{r};
    std::vector<double> ys{r};
    for (std::size_t i = 0; i < p.size(); ++i) {
        xs.push_back(p(i, 0));
        ys.push_back(p(i, 1));
    }
    std::sort(xs.begin(), xs.end());
    std::sort(ys.begin(), ys.end());
    double area = 0.0;
    for (std::size_t a = 0; a + 1 < xs.size(); ++a) {
        for (std::size_t b = 0; b + 1 < ys.size(); ++b) {
            const double cx = 0.5 * (xs[a] + xs[a + 1]);
            const double cy = 0.5 * (ys[b] + ys[b + 1]);
            bool covered = false;
            for (std::size_t i = 0; i < p.size(); ++i) {
                covered = covered || (p(i, 0) <= cx && p(i, 1) <= cy && cx < r && cy < r);
            }
            if (covered) {
                area += (xs[a + 1] - xs[a]) * (ys[b + 1] - ys[b]);
            }
        }
    }
    return area;
}

} // namespace

TEST_CASE("IGD") {
    const PointSet ref({{0.0, 1.0}, {1.0, 0.0}});
    CHECK(igd(ref, ref) == 0.0);
    CHECK(igd(PointSet({{0.0, 1.0}}), ref) == Approx(std::sqrt(2.0) / 2.0).epsilon(1e-12));
    CHECK_THROWS(igd(PointSet(), ref));
    CHECK_THROWS(igd(PointSet({{0.0, 1.0, 2.0}}), ref));

    RandomSource rng(1);
    const PointSet front = reference_front(Family::DTLZ, 2, 3, 300);
    PointSet approx(0, 3);
    for (int i = 0; i < 20; ++i) {
        approx.push_back(std::vector<double>{rng.uniform(), rng.uniform(), rng.uniform()});
    }
    const double before = igd(approx, front);
    CHECK(before >= 0.0);
    approx.push_back(std::vector<double>{0.5, 0.5, 0.7});
    CHECK(igd(approx, front) <= before);

    // Permutation invariance.
    PointSet reversed(0, 3);
    for (std::size_t i = approx.size(); i-- > 0;) {
        reversed.push_back(approx.row(i));
    }
    CHECK(igd(reversed, front) == Approx(igd(approx, front)).epsilon(1e-14));
}

TEST_CASE("exact hypervolume") {
    const std::vector<double> r2{1.1, 1.1};
    CHECK(hv_exact(PointSet({{0.5, 0.5}}), r2) == Approx(0.36).epsilon(1e-14));
    CHECK(hv(PointSet({{0.5, 0.5}}), std::vector<double>{1.0, 1.0}) == Approx(0.36 / 1.21).epsilon(1e-12));
    CHECK(hv(PointSet({{0.0, 0.0}}), std::vector<double>{1.0, 1.0}) == Approx(1.0));
    CHECK(hv(PointSet({{0.0, 0.0, 0.0}}), std::vector<double>{2.0, 2.0, 2.0}) == Approx(1.0));
    // Points beyond the reference contribute nothing.
    CHECK(hv(PointSet({{1.2, 0.1}}), std::vector<double>{1.0, 1.0}) == 0.0);
    CHECK(hv(PointSet({{0.5, 0.5}, {1.2, 0.1}}), std::vector<double>{1.0, 1.0}) == Approx(0.36 / 1.21));
    // Upper bounds scale each objective.
    CHECK(hv(PointSet({{1.0, 2.0}}), std::vector<double>{2.0, 4.0}) == Approx(0.36 / 1.21));

    // 3D: two boxes overlapping in a unit cube, by inclusion-exclusion.
    const std::vector<double> r3{1.0, 1.0, 1.0};
    const PointSet two({{0.5, 0.0, 0.0}, {0.0, 0.5, 0.5}});
    CHECK(hv_exact(two, r3) == Approx(0.5 + 0.25 - 0.125));
    CHECK_THROWS(hv_exact(PointSet({{0.1, 0.1, 0.1, 0.1}}), std::vector<double>(4, 1.0)));
}

TEST_CASE("exact 2D matches a grid oracle") {
    RandomSource rng(8);
    for (int t = 0; t < 50; ++t) {
        const PointSet p = random_front_2d(rng, 1 + rng.index(8));
        CHECK(hv_exact(p, std::vector<double>{1.1, 1.1}) == Approx(grid_area(p, 1.1)).epsilon(1e-12));
    }
}

TEST_CASE("hypervolume monotone under dominance") {
    RandomSource rng(9);
    for (int t = 0; t < 100; ++t) {
        PointSet b(0, 3);
        PointSet a(0, 3);
        for (int i = 0; i < 6; ++i) {
            std::vector<double> p{rng.uniform(), rng.uniform(), rng.uniform()};
            b.push_back(p);
            for (double& v : p) {
                v *= rng.uniform();
            }
            a.push_back(p);
        }
        const std::vector<double> ub{1.0, 1.0, 1.0};
        CHECK(hv(a, ub) >= hv(b, ub));
    }
}

TEST_CASE("Monte Carlo estimator is unbiased") {
    RandomSource rng(10);
    const PointSet p = random_front_2d(rng, 5);
    const std::vector<double> ref{1.1, 1.1};
    const double exact = hv_exact(p, ref) / 1.21;
    const std::size_t samples = 20000;
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        sum += hv_monte_carlo(p, ref, samples, seed);
    }
    const double mean = sum / 30.0;
    const double sigma = std::sqrt(exact * (1.0 - exact) / (samples * 30.0));
    CHECK(std::abs(mean - exact) <= 3.0 * sigma + 1e-12);
}

TEST_CASE("Monte Carlo hypervolume at high dimension") {
    HvConfig cfg;
    cfg.samples = 100000;
    const std::vector<double> ub(5, 1.0);
    CHECK(hv(PointSet({{0.0, 0.0, 0.0, 0.0, 0.0}}), ub, cfg) == 1.0);
    CHECK(hv(PointSet({{2.0, 0.0, 0.0, 0.0, 0.0}}), ub, cfg) == 0.0);
    const double v = hv(PointSet({{0.55, 0.55, 0.55, 0.55, 0.55}}), ub, cfg);
    CHECK(v == Approx(std::pow(0.5, 5)).epsilon(0.05));
    cfg.samples = 0;
    CHECK_THROWS(hv(PointSet({{0.0, 0.0, 0.0, 0.0, 0.0}}), ub, cfg));
    cfg.samples = 10;
    cfg.reference_point_factor = 1.0;
    CHECK_THROWS(cfg.validate());
}
