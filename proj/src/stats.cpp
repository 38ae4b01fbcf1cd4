#include "andopt/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace andopt {

std::string_view to_string(Outcome o) {
    switch (o) {
    case Outcome::Better:
        return "better";
    case Outcome::Worse:
        return "worse";
    case Outcome::Similar:
        break;
    }
    return "similar";
}

std::vector<double> midranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) {
            ++j;
        }
        const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t) {
            ranks[order[t]] = rank;
        }
        i = j + 1;
    }
    return ranks;
}

namespace {

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha,
                                bool smaller_is_better) {
    if (a.size() < 2 || b.size() < 2) {
        throw std::invalid_argument("wilcoxon_rank_sum: each sample needs at least 2 values");
    }
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw std::invalid_argument("wilcoxon_rank_sum: alpha must be in (0, 1)");
    }
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    const std::vector<double> ranks = midranks(pooled);

    const double n1 = static_cast<double>(a.size());
    const double n2 = static_cast<double>(b.size());
    const double n = n1 + n2;

    RankSumResult result;
    result.statistic = std::accumulate(ranks.begin(), ranks.begin() + static_cast<std::ptrdiff_t>(a.size()), 0.0);

    std::vector<double> sorted = pooled;
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) {
            ++j;
        }
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }
    const double variance = n1 * n2 / 12.0 * ((n + 1.0) - tie_term / (n * (n - 1.0)));
    if (variance <= 0.0) {
        return result;
    }
    const double mu = n1 * (n + 1.0) / 2.0;
    const double diff = result.statistic - mu;
    result.z = std::max(0.0, std::abs(diff) - 0.5) / std::sqrt(variance);
    if (diff < 0.0) {
        result.z = -result.z;
    }
    result.p_value = std::clamp(std::erfc(std::abs(result.z) / std::sqrt(2.0)), 0.0, 1.0);
    if (result.p_value < alpha) {
        const double ma = median({a.begin(), a.end()});
        const double mb = median({b.begin(), b.end()});
        if (ma != mb) {
            const bool a_smaller = ma < mb;
            result.outcome = a_smaller == smaller_is_better ? Outcome::Better : Outcome::Worse;
        }
    }
    return result;
}

FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& table, bool smaller_is_better) {
    if (table.empty()) {
        throw std::invalid_argument("friedman_ranks: need at least one row");
    }
    const std::size_t cols = table.front().size();
    if (cols < 2) {
        throw std::invalid_argument("friedman_ranks: need at least two columns");
    }
    FriedmanResult result;
    result.mean_ranks.assign(cols, 0.0);
    for (const auto& row : table) {
        if (row.size() != cols) {
            throw std::invalid_argument("friedman_ranks: ragged table");
        }
        std::vector<double> oriented = row;
        if (!smaller_is_better) {
            for (double& v : oriented) {
                v = -v;
            }
        }
        const std::vector<double> r = midranks(oriented);
        for (std::size_t c = 0; c < cols; ++c) {
            result.mean_ranks[c] += r[c];
        }
    }
    const double rows = static_cast<double>(table.size());
    const double k = static_cast<double>(cols);
    double sum_sq = 0.0;
    for (double& r : result.mean_ranks) {
        r /= rows;
        sum_sq += r * r;
    }
    result.chi_square = 12.0 * rows / (k * (k + 1.0)) * (sum_sq - k * (k + 1.0) * (k + 1.0) / 4.0);
    return result;
}

} // namespace andopt
