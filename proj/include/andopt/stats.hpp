#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace andopt {

enum class Outcome { Better, Similar, Worse };

std::string_view to_string(Outcome o);

struct RankSumResult {
    Outcome outcome = Outcome::Similar;
    double p_value = 1.0;
    double statistic = 0.0; // rank sum of sample a
    double z = 0.0;
};

/// Two-sided Wilcoxon rank-sum test (midranks, normal approximation with
/// continuity correction). `outcome` describes a relative to b.
RankSumResult wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05,
                                bool smaller_is_better = true);

/// Ascending midranks (1-based) of `values`; ties share the mean rank.
std::vector<double> midranks(std::span<const double> values);

struct FriedmanResult {
    std::vector<double> mean_ranks;
    double chi_square = 0.0;
};

/// Mean rank per column of `table` (rows = problems, columns = algorithms).
FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& table, bool smaller_is_better = true);

} // namespace andopt
