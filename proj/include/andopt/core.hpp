#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace andopt {

/// Deterministic pseudo-random source (xoshiro256** seeded through splitmix64).
///
/// The raw sequence is fixed by this implementation rather than by the
/// standard library, so a seed reproduces the same draws on every platform.
/// Instances are cheap to copy but must not be shared between threads.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed = 0);

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept;

    /// Uniform real in [0, 1) with 53 random bits.
    double uniform() noexcept;

    /// Uniform real in [lo, hi).
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    /// Unbiased uniform integer in [0, bound). bound must be positive.
    std::size_t index(std::size_t bound);

    bool coin() noexcept { return uniform() < 0.5; }

private:
    std::uint64_t seed_;
    std::uint64_t s_[4];
};

/// splitmix64 finalizer; also used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Row-major dense set of points, one point per row.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::size_t rows, std::size_t dim) : rows_(rows), dim_(dim), data_(rows * dim, 0.0) {}
    explicit PointSet(const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return rows_; }
    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return rows_ == 0; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }
    std::span<double> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

    void push_back(std::span<const double> point);
    void reserve(std::size_t rows) { data_.reserve(rows * dim_); }

    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<std::vector<double>> to_rows() const;

    bool operator==(const PointSet&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

struct Individual {
    std::vector<double> x;
    std::vector<double> f;
    std::optional<double> cv;

    bool feasible() const noexcept { return !cv || *cv == 0.0; }
    bool operator==(const Individual&) const = default;
};

struct ConstraintValues {
    std::vector<double> inequality; // feasible when <= 0
    std::vector<double> equality;   // feasible when == 0
};

/// A box-constrained (optionally constrained) minimization problem.
/// Both callbacks must be pure functions of their arguments.
struct ProblemSpec {
    using Objectives = std::function<std::vector<double>(std::span<const double>)>;
    using Constraints = std::function<ConstraintValues(std::span<const double>, std::span<const double>)>;

    std::string name;
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> lower;
    std::vector<double> upper;
    bool constrained = false;
    Objectives objectives;
    Constraints constraints;

    /// Throws std::invalid_argument when the declaration is inconsistent.
    void validate() const;
};

/// Evaluates objectives and, for constrained problems, the violation degree.
Individual evaluate(const ProblemSpec& spec, std::vector<double> x);

/// Generational population. Member order is observable: selection tie-breaks use it.
struct Population {
    std::vector<Individual> members;
    std::size_t capacity = 0;

    std::size_t size() const noexcept { return members.size(); }
    bool empty() const noexcept { return members.empty(); }
    const Individual& operator[](std::size_t i) const { return members[i]; }

    PointSet objectives() const;
    /// Members at the given indices, in the given order, with the same capacity.
    Population subset(std::span<const std::size_t> indices) const;

    /// Builds a population from raw objective vectors (decision vectors left empty).
    static Population from_objectives(const std::vector<std::vector<double>>& objectives);
};

/// N members drawn uniformly inside the box, then evaluated.
Population initialize_population(const ProblemSpec& spec, std::size_t n, RandomSource& rng);

} // namespace andopt
