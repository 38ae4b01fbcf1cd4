#include "andopt/sde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace andopt {

std::size_t SdeParams::resolve(std::size_t set_size) const {
    if (set_size < 2) {
        throw std::invalid_argument("SdeParams: density needs at least two members");
    }
    std::size_t resolved = k ? *k : static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(set_size))));
    return std::clamp<std::size_t>(resolved, 1, set_size - 1);
}

std::vector<double> shift(std::span<const double> target, std::span<const double> other) {
    if (target.size() != other.size()) {
        throw std::invalid_argument("shift: dimension mismatch");
    }
    std::vector<double> out(other.size());
    for (std::size_t d = 0; d < other.size(); ++d) {
        out[d] = std::max(other[d], target[d]);
    }
    return out;
}

double sde_density(const PointSet& normalized, std::span<const std::size_t> members, std::size_t target,
                   std::size_t k, std::vector<double>& scratch) {
    const std::size_t m = normalized.dim();
    const double* t = normalized.row(target).data();
    scratch.clear();
    for (std::size_t other : members) {
        if (other == target) {
            continue;
        }
        const double* o = normalized.row(other).data();
        double s = 0.0;
        for (std::size_t d = 0; d < m; ++d) {
            // Only objectives on which `other` is worse contribute.
            const double diff = std::max(o[d], t[d]) - t[d];
            s += diff * diff;
        }
        scratch.push_back(s);
    }
    if (k < 1 || k > scratch.size()) {
        throw std::invalid_argument("sde_density: k out of range");
    }
    auto kth = scratch.begin() + static_cast<std::ptrdiff_t>(k - 1);
    std::nth_element(scratch.begin(), kth, scratch.end());
    return 1.0 / (std::sqrt(*kth) + 2.0);
}

double sde_density(std::size_t target_index, const Population& pop, const NormalizationFrame& frame,
                   const SdeParams& params) {
    if (pop.size() < 2) {
        throw std::invalid_argument("sde_density: population needs at least two members");
    }
    if (target_index >= pop.size()) {
        throw std::out_of_range("sde_density: target index out of range");
    }
    const PointSet normalized = normalize_all(pop.objectives(), frame);
    std::vector<std::size_t> members(pop.size());
    std::iota(members.begin(), members.end(), std::size_t{0});
    std::vector<double> scratch;
    return sde_density(normalized, members, target_index, params.resolve(pop.size()), scratch);
}

} // namespace andopt
