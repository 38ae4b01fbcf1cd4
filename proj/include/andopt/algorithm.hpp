#pragma once

#include "andopt/core.hpp"
#include "andopt/sde.hpp"
#include "andopt/variation.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace andopt {

enum class Variant { AnD, AnDWoA, AnDWoD, CAnD };

std::string_view to_string(Variant v);
/// Accepts "AnD", "AnD-WoA", "AnD-WoD", "C-AnD".
Variant parse_variant(std::string_view name);

struct AlgorithmConfig {
    Variant variant = Variant::AnD;
    std::size_t population_size = 100;
    std::size_t max_fes = 90'000;
    VariationParams variation;
    SdeParams sde;
    std::uint64_t seed = 0;

    void validate() const;
};

struct RunResult {
    Population population;
    std::size_t fes = 0;
    std::size_t generations = 0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
};

/// Sum of positive inequality values (g <= 0 feasible) plus absolute equality residuals.
double constraint_violation(std::span<const double> inequality, std::span<const double> equality);

/// Feasible-first survivor choice: AnD selection among the feasible members when more
/// than N are feasible, otherwise the N smallest violations (stable; original order kept).
Population constrained_environmental_selection(const Population& pool, std::size_t n, const SdeParams& sde = {});

/// Survivor selection for one generation according to the variant.
Population select_survivors(Variant variant, const Population& pool, std::size_t n, const SdeParams& sde);

/// Generational loop: initialize, then mate / merge / select until the FE budget is spent.
RunResult run(const ProblemSpec& spec, const AlgorithmConfig& cfg);

} // namespace andopt
