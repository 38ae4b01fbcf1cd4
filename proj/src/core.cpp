#include "andopt/core.hpp"

#include "andopt/algorithm.hpp"

#include <stdexcept>

namespace andopt {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

} // namespace

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed) {
    std::uint64_t state = seed;
    for (auto& s : s_) {
        s = mix64(state);
        state += 0x9e3779b97f4a7c15ULL;
    }
}

std::uint64_t RandomSource::next_u64() noexcept {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double RandomSource::uniform() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::size_t RandomSource::index(std::size_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("RandomSource::index: bound must be positive");
    }
    // Lemire's multiply-shift with rejection.
    const auto range = static_cast<std::uint64_t>(bound);
    unsigned __int128 product = static_cast<unsigned __int128>(next_u64()) * range;
    auto low = static_cast<std::uint64_t>(product);
    if (low < range) {
        const std::uint64_t threshold = (0 - range) % range;
        while (low < threshold) {
            product = static_cast<unsigned __int128>(next_u64()) * range;
            low = static_cast<std::uint64_t>(product);
        }
    }
    return static_cast<std::size_t>(product >> 64);
}

PointSet::PointSet(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) {
        return;
    }
    dim_ = rows.front().size();
    data_.reserve(rows.size() * dim_);
    for (const auto& r : rows) {
        push_back(r);
    }
}

void PointSet::push_back(std::span<const double> point) {
    if (rows_ == 0 && dim_ == 0) {
        dim_ = point.size();
    }
    if (point.size() != dim_) {
        throw std::invalid_argument("PointSet: dimension mismatch");
    }
    data_.insert(data_.end(), point.begin(), point.end());
    ++rows_;
}

std::vector<std::vector<double>> PointSet::to_rows() const {
    std::vector<std::vector<double>> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        auto r = row(i);
        out.emplace_back(r.begin(), r.end());
    }
    return out;
}

void ProblemSpec::validate() const {
    if (m == 0 || n == 0) {
        throw std::invalid_argument("problem " + name + ": m and n must be positive");
    }
    if (lower.size() != n || upper.size() != n) {
        throw std::invalid_argument("problem " + name + ": bounds must have length n");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!(lower[i] < upper[i])) {
            throw std::invalid_argument("problem " + name + ": lower bound must be below upper bound");
        }
    }
    if (!objectives) {
        throw std::invalid_argument("problem " + name + ": missing objective function");
    }
    if (constrained && !constraints) {
        throw std::invalid_argument("problem " + name + ": constrained problem without constraint function");
    }
}

Individual evaluate(const ProblemSpec& spec, std::vector<double> x) {
    if (x.size() != spec.n) {
        throw std::invalid_argument("evaluate: decision vector has wrong length");
    }
    Individual ind;
    ind.f = spec.objectives(x);
    if (ind.f.size() != spec.m) {
        throw std::logic_error("evaluate: objective function returned wrong length for " + spec.name);
    }
    if (spec.constrained) {
        const ConstraintValues c = spec.constraints(x, ind.f);
        ind.cv = constraint_violation(c.inequality, c.equality);
    }
    ind.x = std::move(x);
    return ind;
}

PointSet Population::objectives() const {
    if (members.empty()) {
        return {};
    }
    PointSet out(0, members.front().f.size());
    out.reserve(members.size());
    for (const auto& ind : members) {
        out.push_back(ind.f);
    }
    return out;
}

Population Population::subset(std::span<const std::size_t> indices) const {
    Population out;
    out.capacity = capacity;
    out.members.reserve(indices.size());
    for (std::size_t i : indices) {
        out.members.push_back(members.at(i));
    }
    return out;
}

Population Population::from_objectives(const std::vector<std::vector<double>>& objectives) {
    Population out;
    out.capacity = objectives.size();
    out.members.reserve(objectives.size());
    for (const auto& f : objectives) {
        out.members.push_back(Individual{{}, f, std::nullopt});
    }
    return out;
}

Population initialize_population(const ProblemSpec& spec, std::size_t n, RandomSource& rng) {
    spec.validate();
    if (n < 1) {
        throw std::invalid_argument("initialize_population: N must be at least 1");
    }
    Population pop;
    pop.capacity = n;
    pop.members.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> x(spec.n);
        for (std::size_t j = 0; j < spec.n; ++j) {
            x[j] = rng.uniform(spec.lower[j], spec.upper[j]);
        }
        pop.members.push_back(evaluate(spec, std::move(x)));
    }
    return pop;
}

} // namespace andopt
