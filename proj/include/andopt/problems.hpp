#pragma once

#include "andopt/core.hpp"

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace andopt {

enum class Family { DTLZ, WFG, CDTLZ };

/// Identifies a benchmark instance. For CDTLZ, index 1/2/3 mean C1-DTLZ1,
/// C2-DTLZ2 and C3-DTLZ4. Zero k/l select the standard defaults:
/// DTLZ1 k=5, DTLZ2-4 k=10 (n = m + k - 1); WFG k = 2(m-1), l = 20.
struct ProblemFamilyParams {
    Family family = Family::DTLZ;
    int index = 2;
    std::size_t m = 3;
    std::size_t k_position = 0;
    std::size_t l_distance = 0;

    std::size_t resolved_k() const;
    std::size_t resolved_l() const;
    std::size_t variable_count() const;
    std::string name() const;
};

/// Parses names such as "DTLZ2", "WFG7", "C2-DTLZ2".
ProblemFamilyParams parse_problem(std::string_view name, std::size_t m);

ProblemSpec make_problem(const ProblemFamilyParams& params);
inline ProblemSpec make_problem(std::string_view name, std::size_t m) { return make_problem(parse_problem(name, m)); }

/// Constraint values of a C-DTLZ problem in "<= 0 is feasible" form.
ConstraintValues evaluate_constraints(const ProblemSpec& problem, std::span<const double> x,
                                      std::span<const double> f);

/// DTLZ4 position-variable bias exponent.
inline constexpr double kDtlz4Alpha = 100.0;

/// Simplex-lattice points with sum 1 and denominator h, first coordinate ascending.
PointSet simplex_lattice(std::size_t m, std::size_t h);

/// Uniform points on the unit simplex: the smallest single-layer lattice with at least
/// `count` points, or two layers (outer + inner shrunk toward the centroid) when the
/// single layer would need h < m.
PointSet uniform_simplex_points(std::size_t m, std::size_t count);

/// Points on the true Pareto front; at least `count` of them unless the front is
/// one-dimensional with fewer distinct lattice positions requested.
PointSet reference_front(Family family, int index, std::size_t m, std::size_t count);
PointSet reference_front(const ProblemFamilyParams& params, std::size_t count);

/// Default reference-set size: 5000 for m <= 5, otherwise 10000.
std::size_t default_reference_size(std::size_t m);

/// Componentwise maximum of a front.
std::vector<double> upper_bounds(const PointSet& front);

// Front files: one point per line, whitespace-separated decimals, '#' starts a comment line.
void write_points(std::ostream& out, const PointSet& points, std::string_view comment = {});
PointSet read_points(std::istream& in);
void write_points_file(const std::filesystem::path& path, const PointSet& points, std::string_view comment = {});
PointSet read_points_file(const std::filesystem::path& path);

} // namespace andopt
