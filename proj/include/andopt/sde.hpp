#pragma once

#include "andopt/core.hpp"
#include "andopt/geometry.hpp"

#include <optional>
#include <span>
#include <vector>

namespace andopt {

/// Neighbour rank used by the shift-based density. Unset means
/// k = max(1, floor(sqrt(|set|))), re-resolved against the current set size.
struct SdeParams {
    std::optional<std::size_t> k;

    /// Resolved k for a set of the given size, clamped into [1, size - 1].
    std::size_t resolve(std::size_t set_size) const;
};

/// Moves `other` so that it is nowhere better than `target`.
std::vector<double> shift(std::span<const double> target, std::span<const double> other);

/// Density of `target` among the rows listed in `members` (which includes `target`),
/// over points already normalized. `scratch` is reused between calls.
double sde_density(const PointSet& normalized, std::span<const std::size_t> members, std::size_t target,
                   std::size_t k, std::vector<double>& scratch);

/// SD(x) = 1 / (l + 2), l being the k-th smallest shifted distance to the other members.
double sde_density(std::size_t target_index, const Population& pop, const NormalizationFrame& frame,
                   const SdeParams& params = {});

} // namespace andopt
