#include "andopt/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace andopt {

void HvConfig::validate() const {
    if (!(reference_point_factor > 1.0)) {
        throw std::invalid_argument("HvConfig: reference_point_factor must exceed 1");
    }
    if (samples < 1) {
        throw std::invalid_argument("HvConfig: samples must be positive");
    }
}

double igd(const PointSet& approx, const PointSet& reference) {
    if (approx.empty() || reference.empty()) {
        throw std::invalid_argument("igd: empty point set");
    }
    if (approx.dim() != reference.dim()) {
        throw std::invalid_argument("igd: dimension mismatch");
    }
    const std::size_t m = approx.dim();
    double total = 0.0;
    for (std::size_t r = 0; r < reference.size(); ++r) {
        const auto ref = reference.row(r);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < approx.size(); ++a) {
            const auto p = approx.row(a);
            double d2 = 0.0;
            for (std::size_t d = 0; d < m && d2 < best; ++d) {
                const double diff = p[d] - ref[d];
                d2 += diff * diff;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

namespace {

// Area dominated by points (x, y) w.r.t. (rx, ry); inputs strictly inside the box.
double area_2d(std::vector<std::pair<double, double>> pts, double rx, double ry) {
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double y_floor = ry;
    for (const auto& [x, y] : pts) {
        if (y < y_floor) {
            area += (rx - x) * (y_floor - y);
            y_floor = y;
        }
    }
    return area;
}

} // namespace

double hv_exact(const PointSet& normalized, std::span<const double> ref) {
    const std::size_t m = normalized.dim();
    if (m != ref.size()) {
        throw std::invalid_argument("hv_exact: dimension mismatch");
    }
    if (m < 1 || m > 3) {
        throw std::invalid_argument("hv_exact: only m <= 3 is supported");
    }
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        const auto p = normalized.row(i);
        bool ok = true;
        for (std::size_t d = 0; d < m; ++d) {
            ok = ok && p[d] < ref[d];
        }
        if (ok) {
            inside.push_back(i);
        }
    }
    if (inside.empty()) {
        return 0.0;
    }
    if (m == 1) {
        double best = ref[0];
        for (std::size_t i : inside) {
            best = std::min(best, normalized(i, 0));
        }
        return ref[0] - best;
    }
    if (m == 2) {
        std::vector<std::pair<double, double>> pts;
        for (std::size_t i : inside) {
            pts.emplace_back(normalized(i, 0), normalized(i, 1));
        }
        return area_2d(std::move(pts), ref[0], ref[1]);
    }
    // m == 3: sweep along the third objective, integrating 2D slices.
    std::sort(inside.begin(), inside.end(), [&](std::size_t a, std::size_t b) { return normalized(a, 2) < normalized(b, 2); });
    std::vector<std::pair<double, double>> slice;
    double volume = 0.0;
    for (std::size_t s = 0; s < inside.size(); ++s) {
        const std::size_t i = inside[s];
        slice.emplace_back(normalized(i, 0), normalized(i, 1));
        const double z_next = s + 1 < inside.size() ? normalized(inside[s + 1], 2) : ref[2];
        const double depth = z_next - normalized(i, 2);
        if (depth > 0.0) {
            volume += area_2d(slice, ref[0], ref[1]) * depth;
        }
    }
    return volume;
}

double hv_monte_carlo(const PointSet& normalized, std::span<const double> ref, std::size_t samples,
                      std::uint64_t seed) {
    const std::size_t m = normalized.dim();
    if (m != ref.size()) {
        throw std::invalid_argument("hv_monte_carlo: dimension mismatch");
    }
    if (samples < 1) {
        throw std::invalid_argument("hv_monte_carlo: samples must be positive");
    }
    std::vector<double> lowest(ref.begin(), ref.end());
    PointSet kept(0, m);
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        const auto p = normalized.row(i);
        bool ok = true;
        for (std::size_t d = 0; d < m; ++d) {
            ok = ok && p[d] < ref[d];
        }
        if (ok) {
            kept.push_back(p);
            for (std::size_t d = 0; d < m; ++d) {
                lowest[d] = std::min(lowest[d], p[d]);
            }
        }
    }
    if (kept.empty()) {
        return 0.0;
    }
    RandomSource rng(seed);
    std::vector<double> s(m);
    std::size_t hits = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        bool reachable = true;
        for (std::size_t d = 0; d < m; ++d) {
            s[d] = rng.uniform() * ref[d];
            reachable = reachable && s[d] >= lowest[d];
        }
        if (!reachable) {
            continue;
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            const auto p = kept.row(i);
            std::size_t d = 0;
            while (d < m && p[d] <= s[d]) {
                ++d;
            }
            if (d == m) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double hv(const PointSet& approx, std::span<const double> pf_upper_bounds, const HvConfig& cfg) {
    cfg.validate();
    if (approx.empty()) {
        throw std::invalid_argument("hv: empty point set");
    }
    const std::size_t m = approx.dim();
    if (pf_upper_bounds.size() != m) {
        throw std::invalid_argument("hv: upper bounds dimension mismatch");
    }
    PointSet normalized(0, m);
    normalized.reserve(approx.size());
    std::vector<double> p(m);
    for (std::size_t i = 0; i < approx.size(); ++i) {
        for (std::size_t d = 0; d < m; ++d) {
            p[d] = approx(i, d) / pf_upper_bounds[d];
        }
        normalized.push_back(p);
    }
    const std::vector<double> ref(m, cfg.reference_point_factor);
    if (m <= 3) {
        return hv_exact(normalized, ref) / std::pow(cfg.reference_point_factor, static_cast<double>(m));
    }
    return hv_monte_carlo(normalized, ref, cfg.samples, cfg.seed);
}

} // namespace andopt
