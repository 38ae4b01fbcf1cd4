#include "andopt/selection.hpp"

#include "andopt/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace andopt {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_target(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("selection: N must be at least 1");
    }
}

std::vector<std::size_t> all_indices(std::size_t k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return idx;
}

/// Repeatedly finds the live pair with the smallest angle (ties: lexicographically
/// smallest (j, k)) and asks `pick_victim(j, k, live)` which of the two to drop.
///
/// Each live row j caches its best partner among live rows k > j. A removal only
/// invalidates the rows that pointed at the removed member, so the full matrix is
/// scanned once and each iteration costs O(K) plus the invalidated rows.
template <class PickVictim>
std::vector<std::size_t> prune_by_angle(const AngleMatrix& angles, std::size_t n, PickVictim&& pick_victim) {
    const std::size_t k = angles.size();
    std::vector<char> alive(k, 1);
    std::vector<std::size_t> live = all_indices(k);
    std::vector<std::size_t> partner(k, kNone);
    std::vector<double> best(k, std::numeric_limits<double>::infinity());

    auto refresh = [&](std::size_t j) {
        partner[j] = kNone;
        best[j] = std::numeric_limits<double>::infinity();
        auto row = angles.row(j);
        for (std::size_t l = j + 1; l < k; ++l) {
            if (alive[l] && row[l] < best[j]) {
                best[j] = row[l];
                partner[j] = l;
            }
        }
    };
    for (std::size_t j = 0; j < k; ++j) {
        refresh(j);
    }

    while (live.size() > n) {
        std::size_t first = kNone;
        for (std::size_t j : live) {
            if (partner[j] != kNone && (first == kNone || best[j] < best[first])) {
                first = j;
            }
        }
        const std::size_t second = partner[first];
        const std::size_t victim = pick_victim(first, second, std::span<const std::size_t>(live));

        alive[victim] = 0;
        live.erase(std::lower_bound(live.begin(), live.end(), victim));
        partner[victim] = kNone;
        for (std::size_t j : live) {
            if (j >= victim) {
                break;
            }
            if (partner[j] == victim) {
                refresh(j);
            }
        }
    }
    return live;
}

} // namespace

std::vector<std::size_t> select_and(const PointSet& objectives, std::size_t n, const SdeParams& sde) {
    check_target(n);
    if (objectives.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    if (objectives.size() <= n) {
        return all_indices(objectives.size());
    }
    const PointSet normalized = normalize_all(objectives, compute_frame(objectives));
    const AngleMatrix angles = angle_matrix(normalized);
    std::vector<double> scratch;
    return prune_by_angle(angles, n, [&](std::size_t j, std::size_t k, std::span<const std::size_t> live) {
        const std::size_t rank = sde.resolve(live.size());
        const double sd_j = sde_density(normalized, live, j, rank, scratch);
        const double sd_k = sde_density(normalized, live, k, rank, scratch);
        return sd_j < sd_k ? k : j;
    });
}

std::vector<std::size_t> select_wod(const PointSet& objectives, std::size_t n) {
    check_target(n);
    if (objectives.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    if (objectives.size() <= n) {
        return all_indices(objectives.size());
    }
    const PointSet normalized = normalize_all(objectives, compute_frame(objectives));
    const AngleMatrix angles = angle_matrix(normalized);
    std::vector<double> to_ideal(normalized.size());
    for (std::size_t i = 0; i < normalized.size(); ++i) {
        double s = 0.0;
        for (double v : normalized.row(i)) {
            s += v * v;
        }
        to_ideal[i] = std::sqrt(s);
    }
    return prune_by_angle(angles, n, [&](std::size_t j, std::size_t k, std::span<const std::size_t>) {
        return to_ideal[k] > to_ideal[j] ? k : j;
    });
}

std::vector<std::size_t> select_woa(const PointSet& objectives, std::size_t n, const SdeParams& sde) {
    check_target(n);
    if (objectives.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    const std::size_t k = objectives.size();
    if (k <= n) {
        return all_indices(k);
    }
    const PointSet normalized = normalize_all(objectives, compute_frame(objectives));
    const std::vector<std::size_t> everyone = all_indices(k);
    const std::size_t rank = sde.resolve(k);
    std::vector<double> density(k);
    std::vector<double> scratch;
    for (std::size_t i = 0; i < k; ++i) {
        density[i] = sde_density(normalized, everyone, i, rank, scratch);
    }
    // Densest first; among equal densities the later index goes first.
    std::vector<std::size_t> order = everyone;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (density[a] != density[b]) {
            return density[a] > density[b];
        }
        return a > b;
    });
    std::vector<std::size_t> survivors(order.begin() + static_cast<std::ptrdiff_t>(k - n), order.end());
    std::sort(survivors.begin(), survivors.end());
    return survivors;
}

Population environmental_selection(const Population& pool, std::size_t n, const SdeParams& sde) {
    check_target(n);
    if (pool.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    if (pool.size() <= n) {
        return pool;
    }
    Population out = pool.subset(select_and(pool.objectives(), n, sde));
    out.capacity = n;
    return out;
}

Population selection_woa(const Population& pool, std::size_t n, const SdeParams& sde) {
    check_target(n);
    if (pool.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    if (pool.size() <= n) {
        return pool;
    }
    Population out = pool.subset(select_woa(pool.objectives(), n, sde));
    out.capacity = n;
    return out;
}

Population selection_wod(const Population& pool, std::size_t n) {
    check_target(n);
    if (pool.empty()) {
        throw std::invalid_argument("selection: empty union");
    }
    if (pool.size() <= n) {
        return pool;
    }
    Population out = pool.subset(select_wod(pool.objectives(), n));
    out.capacity = n;
    return out;
}

} // namespace andopt
