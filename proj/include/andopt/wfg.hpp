#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Building blocks of the WFG toolkit, exposed for the problem definitions and
// the reference-front generator.
namespace andopt::wfg {

// Transformations. All map [0, 1] into [0, 1].
double b_poly(double y, double alpha);
double b_flat(double y, double a, double b, double c);
double b_param(double y, double u, double a, double b, double c);
double s_linear(double y, double a);
double s_decept(double y, double a, double b, double c);
double s_multi(double y, double a, double b, double c);
double r_sum(std::span<const double> y, std::span<const double> w);
double r_nonsep(std::span<const double> y, std::size_t a);

// Shape functions; `x` holds the M-1 position parameters, `i` is 1-based.
double linear(std::span<const double> x, std::size_t i, std::size_t m);
double convex(std::span<const double> x, std::size_t i, std::size_t m);
double concave(std::span<const double> x, std::size_t i, std::size_t m);
double mixed(std::span<const double> x, double a, double alpha);
double disc(std::span<const double> x, double a, double alpha, double beta);

/// Front shape of WFG`index` at position parameters x (length m-1), scaled by S_i = 2i.
std::vector<double> front_point(int index, std::span<const double> x, std::size_t m);

/// Objective vector of WFG`index` for decision vector z (z_i in [0, 2i]) with
/// k position-related variables.
std::vector<double> evaluate(int index, std::span<const double> z, std::size_t m, std::size_t k);

} // namespace andopt::wfg
