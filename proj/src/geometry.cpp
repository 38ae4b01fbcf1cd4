#include "andopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace andopt {

NormalizationFrame NormalizationFrame::identity(std::size_t m) {
    return {std::vector<double>(m, 0.0), std::vector<double>(m, 1.0)};
}

NormalizationFrame compute_frame(const PointSet& objectives) {
    if (objectives.empty()) {
        throw std::invalid_argument("compute_frame: empty population");
    }
    const std::size_t m = objectives.dim();
    auto first = objectives.row(0);
    NormalizationFrame frame{{first.begin(), first.end()}, {first.begin(), first.end()}};
    for (std::size_t i = 1; i < objectives.size(); ++i) {
        auto f = objectives.row(i);
        for (std::size_t d = 0; d < m; ++d) {
            frame.z_min[d] = std::min(frame.z_min[d], f[d]);
            frame.z_max[d] = std::max(frame.z_max[d], f[d]);
        }
    }
    return frame;
}

NormalizationFrame compute_frame(const Population& pop) {
    if (pop.empty()) {
        throw std::invalid_argument("compute_frame: empty population");
    }
    return compute_frame(pop.objectives());
}

void normalize_into(std::span<const double> f, const NormalizationFrame& frame, std::span<double> out) {
    for (std::size_t d = 0; d < f.size(); ++d) {
        const double range = frame.z_max[d] - frame.z_min[d];
        out[d] = range < kRangeEpsilon ? 0.0 : (f[d] - frame.z_min[d]) / range;
    }
}

std::vector<double> normalize(std::span<const double> f, const NormalizationFrame& frame) {
    if (f.size() != frame.z_min.size()) {
        throw std::invalid_argument("normalize: dimension mismatch");
    }
    std::vector<double> out(f.size());
    normalize_into(f, frame, out);
    return out;
}

PointSet normalize_all(const PointSet& objectives, const NormalizationFrame& frame) {
    PointSet out(objectives.size(), objectives.dim());
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        normalize_into(objectives.row(i), frame, out.row(i));
    }
    return out;
}

namespace {

double norm(std::span<const double> a) {
    double s = 0.0;
    for (double v : a) {
        s += v * v;
    }
    return std::sqrt(s);
}

double angle_from_parts(double dot, double norm_a, double norm_b) {
    if (norm_a < kNormEpsilon || norm_b < kNormEpsilon) {
        return 0.0;
    }
    const double c = std::clamp(std::abs(dot) / (norm_a * norm_b), 0.0, 1.0);
    return std::acos(c);
}

} // namespace

double vector_angle(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("vector_angle: dimension mismatch");
    }
    double dot = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
        dot += a[d] * b[d];
    }
    return angle_from_parts(dot, norm(a), norm(b));
}

AngleMatrix angle_matrix(const PointSet& normalized) {
    const std::size_t k = normalized.size();
    const std::size_t m = normalized.dim();
    AngleMatrix out(k);
    std::vector<double> norms(k);
    for (std::size_t j = 0; j < k; ++j) {
        norms[j] = norm(normalized.row(j));
    }
    for (std::size_t j = 0; j < k; ++j) {
        const double* a = normalized.row(j).data();
        for (std::size_t l = j + 1; l < k; ++l) {
            const double* b = normalized.row(l).data();
            double dot = 0.0;
            for (std::size_t d = 0; d < m; ++d) {
                dot += a[d] * b[d];
            }
            out.set(j, l, angle_from_parts(dot, norms[j], norms[l]));
        }
    }
    return out;
}

AngleMatrix angle_matrix(const Population& pop, const NormalizationFrame& frame) {
    if (pop.empty()) {
        throw std::invalid_argument("angle_matrix: empty population");
    }
    return angle_matrix(normalize_all(pop.objectives(), frame));
}

} // namespace andopt
