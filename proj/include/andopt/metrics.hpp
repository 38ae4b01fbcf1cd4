#pragma once

#include "andopt/core.hpp"

#include <cstdint>
#include <span>

namespace andopt {

struct HvConfig {
    double reference_point_factor = 1.1;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 0x5eed'0f'4a11ULL;

    void validate() const;
};

/// Mean, over reference points, of the distance to the nearest approximation point.
double igd(const PointSet& approx, const PointSet& reference);

/// Hypervolume of `approx` after dividing each objective by `pf_upper_bounds`,
/// relative to the box [0, factor]^m. Exact for m <= 3, Monte Carlo above.
double hv(const PointSet& approx, std::span<const double> pf_upper_bounds, const HvConfig& cfg = {});

/// Exact dominated volume of already-normalized points (m <= 3) w.r.t. `ref`, unscaled.
double hv_exact(const PointSet& normalized, std::span<const double> ref);

/// Monte Carlo estimate of the dominated fraction of the box [0, ref] for normalized points.
double hv_monte_carlo(const PointSet& normalized, std::span<const double> ref, std::size_t samples,
                      std::uint64_t seed);

} // namespace andopt
