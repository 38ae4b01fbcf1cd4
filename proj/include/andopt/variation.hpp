#pragma once

#include "andopt/core.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace andopt {

struct VariationParams {
    double p_crossover = 1.0;
    /// Per-variable mutation probability; unset means 1/n.
    std::optional<double> p_mutation;
    double eta_crossover = 20.0;
    double eta_mutation = 20.0;

    double mutation_rate(std::size_t n) const { return p_mutation ? *p_mutation : 1.0 / static_cast<double>(n); }
    void validate() const;
};

struct Bounds {
    std::span<const double> lower;
    std::span<const double> upper;
};

/// SBX spread factor for a uniform draw u in [0, 1).
double sbx_spread_factor(double u, double eta);

/// Bounded polynomial-mutation step for variable value x given a uniform draw u.
/// Returns the perturbed value before clamping.
double polynomial_mutation_step(double x, double lower, double upper, double u, double eta);

/// Simulated binary crossover. Draw order: one pair gate, then per variable
/// (spread draw, sign coin, exchange gate).
std::pair<std::vector<double>, std::vector<double>> sbx(std::span<const double> p1, std::span<const double> p2,
                                                         Bounds bounds, double eta, double p_crossover,
                                                         RandomSource& rng);

/// Polynomial mutation. Draw order: per variable a gate, then a step draw when the gate fires.
std::vector<double> polynomial_mutation(std::span<const double> x, Bounds bounds, double eta, double p_mutation,
                                        RandomSource& rng);

/// Random pairing (distinct within a pair), SBX, mutation and evaluation.
/// Produces exactly |parents| evaluated offspring.
Population mate(const Population& parents, const ProblemSpec& spec, const VariationParams& params,
                RandomSource& rng);

} // namespace andopt
