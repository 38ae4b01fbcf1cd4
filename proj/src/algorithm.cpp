#include "andopt/algorithm.hpp"

#include "andopt/selection.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace andopt {

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::AnD:
        return "AnD";
    case Variant::AnDWoA:
        return "AnD-WoA";
    case Variant::AnDWoD:
        return "AnD-WoD";
    case Variant::CAnD:
        return "C-AnD";
    }
    return "?";
}

Variant parse_variant(std::string_view name) {
    for (Variant v : {Variant::AnD, Variant::AnDWoA, Variant::AnDWoD, Variant::CAnD}) {
        if (name == to_string(v)) {
            return v;
        }
    }
    throw std::invalid_argument("unknown algorithm variant: " + std::string(name));
}

void AlgorithmConfig::validate() const {
    if (population_size < 1) {
        throw std::invalid_argument("AlgorithmConfig: population size must be positive");
    }
    if (max_fes < population_size) {
        throw std::invalid_argument("AlgorithmConfig: max_fes must be at least the population size");
    }
    variation.validate();
}

double constraint_violation(std::span<const double> inequality, std::span<const double> equality) {
    double cv = 0.0;
    for (double g : inequality) {
        cv += std::max(0.0, g);
    }
    for (double h : equality) {
        cv += std::abs(h);
    }
    return cv;
}

Population constrained_environmental_selection(const Population& pool, std::size_t n, const SdeParams& sde) {
    if (n < 1) {
        throw std::invalid_argument("selection: N must be at least 1");
    }
    if (pool.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!pool[i].cv) {
            throw std::invalid_argument("constrained selection: member without constraint violation");
        }
        if (*pool[i].cv == 0.0) {
            feasible.push_back(i);
        }
    }
    if (feasible.size() > n) {
        return environmental_selection(pool.subset(feasible), n, sde);
    }
    std::vector<std::size_t> order(pool.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return *pool[a].cv < *pool[b].cv; });
    order.resize(std::min(n, order.size()));
    std::sort(order.begin(), order.end());
    Population out = pool.subset(order);
    out.capacity = n;
    return out;
}

Population select_survivors(Variant variant, const Population& pool, std::size_t n, const SdeParams& sde) {
    switch (variant) {
    case Variant::AnD:
        return environmental_selection(pool, n, sde);
    case Variant::AnDWoA:
        return selection_woa(pool, n, sde);
    case Variant::AnDWoD:
        return selection_wod(pool, n);
    case Variant::CAnD:
        return constrained_environmental_selection(pool, n, sde);
    }
    throw std::logic_error("select_survivors: unhandled variant");
}

RunResult run(const ProblemSpec& spec, const AlgorithmConfig& cfg) {
    spec.validate();
    cfg.validate();
    if (cfg.variant == Variant::CAnD && !spec.constrained) {
        throw std::invalid_argument("C-AnD requires a constrained problem, got " + spec.name);
    }
    const auto start = std::chrono::steady_clock::now();

    RandomSource rng(cfg.seed);
    const std::size_t n = cfg.population_size;
    RunResult result;
    result.seed = cfg.seed;
    Population pop = initialize_population(spec, n, rng);
    result.fes = pop.size();

    while (result.fes < cfg.max_fes) {
        Population offspring = mate(pop, spec, cfg.variation, rng);
        result.fes += offspring.size();
        Population pool = std::move(pop);
        pool.members.insert(pool.members.end(), std::make_move_iterator(offspring.members.begin()),
                            std::make_move_iterator(offspring.members.end()));
        pop = select_survivors(cfg.variant, pool, n, cfg.sde);
        pop.capacity = n;
        ++result.generations;
    }

    result.population = std::move(pop);
    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace andopt
