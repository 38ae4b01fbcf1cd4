#include "andopt/variation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace andopt {

void VariationParams::validate() const {
    auto is_prob = [](double p) { return p >= 0.0 && p <= 1.0; };
    if (!is_prob(p_crossover) || (p_mutation && !is_prob(*p_mutation))) {
        throw std::invalid_argument("VariationParams: probabilities must lie in [0, 1]");
    }
    if (eta_crossover < 0.0 || eta_mutation < 0.0) {
        throw std::invalid_argument("VariationParams: distribution indexes must be nonnegative");
    }
}

double sbx_spread_factor(double u, double eta) {
    const double exponent = 1.0 / (eta + 1.0);
    if (u <= 0.5) {
        return std::pow(2.0 * u, exponent);
    }
    return std::pow(1.0 / (2.0 - 2.0 * u), exponent);
}

double polynomial_mutation_step(double x, double lower, double upper, double u, double eta) {
    const double range = upper - lower;
    const double power = 1.0 / (eta + 1.0);
    double delta = 0.0;
    if (u <= 0.5) {
        const double xy = 1.0 - (x - lower) / range;
        const double val = 2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta + 1.0);
        delta = std::pow(val, power) - 1.0;
    } else {
        const double xy = 1.0 - (upper - x) / range;
        const double val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta + 1.0);
        delta = 1.0 - std::pow(val, power);
    }
    return x + delta * range;
}

std::pair<std::vector<double>, std::vector<double>> sbx(std::span<const double> p1, std::span<const double> p2,
                                                         Bounds bounds, double eta, double p_crossover,
                                                         RandomSource& rng) {
    const std::size_t n = p1.size();
    if (p2.size() != n || bounds.lower.size() != n || bounds.upper.size() != n) {
        throw std::invalid_argument("sbx: dimension mismatch");
    }
    std::vector<double> c1(p1.begin(), p1.end());
    std::vector<double> c2(p2.begin(), p2.end());
    if (!(rng.uniform() < p_crossover)) {
        return {std::move(c1), std::move(c2)};
    }
    for (std::size_t i = 0; i < n; ++i) {
        double beta = sbx_spread_factor(rng.uniform(), eta);
        if (rng.coin()) {
            beta = -beta;
        }
        if (rng.coin()) {
            continue; // variable copied through unchanged
        }
        const double mean = 0.5 * (p1[i] + p2[i]);
        const double half_diff = 0.5 * (p1[i] - p2[i]);
        c1[i] = std::clamp(mean + beta * half_diff, bounds.lower[i], bounds.upper[i]);
        c2[i] = std::clamp(mean - beta * half_diff, bounds.lower[i], bounds.upper[i]);
    }
    return {std::move(c1), std::move(c2)};
}

std::vector<double> polynomial_mutation(std::span<const double> x, Bounds bounds, double eta, double p_mutation,
                                        RandomSource& rng) {
    const std::size_t n = x.size();
    if (bounds.lower.size() != n || bounds.upper.size() != n) {
        throw std::invalid_argument("polynomial_mutation: dimension mismatch");
    }
    std::vector<double> out(x.begin(), x.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (!(rng.uniform() < p_mutation)) {
            continue;
        }
        const double lo = bounds.lower[i];
        const double hi = bounds.upper[i];
        const double v = std::clamp(out[i], lo, hi);
        out[i] = std::clamp(polynomial_mutation_step(v, lo, hi, rng.uniform(), eta), lo, hi);
    }
    return out;
}

Population mate(const Population& parents, const ProblemSpec& spec, const VariationParams& params,
                RandomSource& rng) {
    params.validate();
    const std::size_t k = parents.size();
    if (k < 2) {
        throw std::invalid_argument("mate: need at least two parents");
    }
    const Bounds bounds{spec.lower, spec.upper};
    const double p_m = params.mutation_rate(spec.n);

    Population offspring;
    offspring.capacity = parents.capacity;
    offspring.members.reserve(k + 1);
    while (offspring.size() < k) {
        const std::size_t a = rng.index(k);
        std::size_t b = rng.index(k - 1);
        if (b >= a) {
            ++b;
        }
        auto [c1, c2] = sbx(parents[a].x, parents[b].x, bounds, params.eta_crossover, params.p_crossover, rng);
        offspring.members.push_back(
            evaluate(spec, polynomial_mutation(c1, bounds, params.eta_mutation, p_m, rng)));
        if (offspring.size() < k) {
            offspring.members.push_back(
                evaluate(spec, polynomial_mutation(c2, bounds, params.eta_mutation, p_m, rng)));
        }
    }
    return offspring;
}

} // namespace andopt
