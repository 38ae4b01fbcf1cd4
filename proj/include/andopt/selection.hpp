#pragma once

#include "andopt/core.hpp"
#include "andopt/sde.hpp"

#include <cstddef>
#include <vector>

namespace andopt {

// Index-level selectors. Each returns the surviving row indices of `objectives`
// in ascending (original) order; at most `n` survive.

/// Angle-based pairing, shift-based density tie-break (AnD).
std::vector<std::size_t> select_and(const PointSet& objectives, std::size_t n, const SdeParams& sde = {});
/// Density-only truncation: drop the densest members (AnD-WoA).
std::vector<std::size_t> select_woa(const PointSet& objectives, std::size_t n, const SdeParams& sde = {});
/// Angle-based pairing, distance-to-ideal tie-break (AnD-WoD).
std::vector<std::size_t> select_wod(const PointSet& objectives, std::size_t n);

Population environmental_selection(const Population& pool, std::size_t n, const SdeParams& sde = {});
Population selection_woa(const Population& pool, std::size_t n, const SdeParams& sde = {});
Population selection_wod(const Population& pool, std::size_t n);

} // namespace andopt
