#pragma once

#include "andopt/core.hpp"

#include <span>
#include <vector>

namespace andopt {

/// Objective ranges below this width normalize to 0.
inline constexpr double kRangeEpsilon = 1e-12;
/// Normalized vectors shorter than this have angle 0 with everything.
inline constexpr double kNormEpsilon = 1e-12;

/// Ideal point and nadir estimate of a concrete population.
struct NormalizationFrame {
    std::vector<double> z_min;
    std::vector<double> z_max;

    static NormalizationFrame identity(std::size_t m);
};

NormalizationFrame compute_frame(const PointSet& objectives);
NormalizationFrame compute_frame(const Population& pop);

std::vector<double> normalize(std::span<const double> f, const NormalizationFrame& frame);
void normalize_into(std::span<const double> f, const NormalizationFrame& frame, std::span<double> out);
PointSet normalize_all(const PointSet& objectives, const NormalizationFrame& frame);

/// Acute angle between two normalized objective vectors, in [0, pi/2].
double vector_angle(std::span<const double> a, std::span<const double> b);

/// Symmetric K x K matrix of pairwise vector angles with a zero diagonal.
class AngleMatrix {
public:
    AngleMatrix() = default;
    explicit AngleMatrix(std::size_t k) : k_(k), values_(k * k, 0.0) {}

    std::size_t size() const noexcept { return k_; }
    double operator()(std::size_t j, std::size_t k) const { return values_[j * k_ + k]; }
    std::span<const double> row(std::size_t j) const { return {values_.data() + j * k_, k_}; }

    void set(std::size_t j, std::size_t k, double v) {
        values_[j * k_ + k] = v;
        values_[k * k_ + j] = v;
    }

private:
    std::size_t k_ = 0;
    std::vector<double> values_;
};

/// Angles between already-normalized points.
AngleMatrix angle_matrix(const PointSet& normalized);
AngleMatrix angle_matrix(const Population& pop, const NormalizationFrame& frame);

} // namespace andopt
