#include "andopt/problems.hpp"

#include "andopt/wfg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace andopt {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t dtlz_default_k(int index) { return index == 1 ? 5 : 10; }

/// Underlying DTLZ index of a C-DTLZ instance.
int cdtlz_base(int index) {
    switch (index) {
    case 1:
        return 1;
    case 2:
        return 2;
    case 3:
        return 4;
    default:
        throw std::invalid_argument("C-DTLZ index must be 1, 2 or 3");
    }
}

double rastrigin_g(std::span<const double> tail) {
    double s = 0.0;
    for (double v : tail) {
        const double d = v - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (static_cast<double>(tail.size()) + s);
}

double sphere_g(std::span<const double> tail) {
    double s = 0.0;
    for (double v : tail) {
        s += (v - 0.5) * (v - 0.5);
    }
    return s;
}

std::vector<double> dtlz_linear(std::span<const double> x, std::size_t m, double g) {
    std::vector<double> f(m, 0.5 * (1.0 + g));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + i + 1 < m; ++j) {
            f[i] *= x[j];
        }
        if (i > 0) {
            f[i] *= 1.0 - x[m - 1 - i];
        }
    }
    return f;
}

std::vector<double> dtlz_spherical(std::span<const double> x, std::size_t m, double g, double alpha) {
    std::vector<double> f(m, 1.0 + g);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j + i + 1 < m; ++j) {
            f[i] *= std::cos(std::pow(x[j], alpha) * kPi / 2.0);
        }
        if (i > 0) {
            f[i] *= std::sin(std::pow(x[m - 1 - i], alpha) * kPi / 2.0);
        }
    }
    return f;
}

std::vector<double> dtlz(int index, std::span<const double> x, std::size_t m) {
    const auto tail = x.subspan(m - 1);
    switch (index) {
    case 1:
        return dtlz_linear(x, m, rastrigin_g(tail));
    case 2:
        return dtlz_spherical(x, m, sphere_g(tail), 1.0);
    case 3:
        return dtlz_spherical(x, m, rastrigin_g(tail), 1.0);
    case 4:
        return dtlz_spherical(x, m, sphere_g(tail), kDtlz4Alpha);
    default:
        throw std::invalid_argument("DTLZ index must be in 1..4");
    }
}

ConstraintValues cdtlz_constraints(int index, std::span<const double> f) {
    const std::size_t m = f.size();
    ConstraintValues c;
    double sum_sq = 0.0;
    for (double v : f) {
        sum_sq += v * v;
    }
    switch (index) {
    case 1: {
        double s = f[m - 1] / 0.6;
        for (std::size_t i = 0; i + 1 < m; ++i) {
            s += f[i] / 0.5;
        }
        c.inequality.push_back(s - 1.0);
        break;
    }
    case 2: {
        const double r = m == 3 ? 0.4 : 0.5;
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            best = std::min(best, sum_sq - f[i] * f[i] + (f[i] - 1.0) * (f[i] - 1.0) - r * r);
        }
        const double centre = 1.0 / std::sqrt(static_cast<double>(m));
        double to_centre = 0.0;
        for (double v : f) {
            to_centre += (v - centre) * (v - centre);
        }
        c.inequality.push_back(std::min(best, to_centre - r * r));
        break;
    }
    case 3:
        for (std::size_t j = 0; j < m; ++j) {
            c.inequality.push_back(1.0 - (f[j] * f[j] / 4.0 + (sum_sq - f[j] * f[j])));
        }
        break;
    default:
        throw std::invalid_argument("C-DTLZ index must be 1, 2 or 3");
    }
    return c;
}

} // namespace

std::size_t ProblemFamilyParams::resolved_k() const {
    if (k_position != 0) {
        return k_position;
    }
    switch (family) {
    case Family::DTLZ:
        return dtlz_default_k(index);
    case Family::CDTLZ:
        return dtlz_default_k(cdtlz_base(index));
    case Family::WFG:
        return 2 * (m - 1);
    }
    return 0;
}

std::size_t ProblemFamilyParams::resolved_l() const {
    if (family != Family::WFG) {
        return 0;
    }
    return l_distance != 0 ? l_distance : 20;
}

std::size_t ProblemFamilyParams::variable_count() const {
    if (family == Family::WFG) {
        return resolved_k() + resolved_l();
    }
    return m + resolved_k() - 1;
}

std::string ProblemFamilyParams::name() const {
    switch (family) {
    case Family::DTLZ:
        return "DTLZ" + std::to_string(index);
    case Family::WFG:
        return "WFG" + std::to_string(index);
    case Family::CDTLZ:
        return "C" + std::to_string(index) + "-DTLZ" + std::to_string(cdtlz_base(index));
    }
    return "?";
}

ProblemFamilyParams parse_problem(std::string_view name, std::size_t m) {
    ProblemFamilyParams p;
    p.m = m;
    auto number = [&](std::string_view digits) {
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("unknown problem: " + std::string(name));
        }
        return std::stoi(std::string(digits));
    };
    if (name.starts_with("DTLZ")) {
        p.family = Family::DTLZ;
        p.index = number(name.substr(4));
        if (p.index < 1 || p.index > 4) {
            throw std::invalid_argument("unknown problem: " + std::string(name));
        }
    } else if (name.starts_with("WFG")) {
        p.family = Family::WFG;
        p.index = number(name.substr(3));
        if (p.index < 1 || p.index > 9) {
            throw std::invalid_argument("unknown problem: " + std::string(name));
        }
    } else if (name == "C1-DTLZ1" || name == "C2-DTLZ2" || name == "C3-DTLZ4") {
        p.family = Family::CDTLZ;
        p.index = name[1] - '0';
    } else {
        throw std::invalid_argument("unknown problem: " + std::string(name));
    }
    return p;
}

ProblemSpec make_problem(const ProblemFamilyParams& params) {
    const std::size_t m = params.m;
    if (m < 2 || m > 15) {
        throw std::invalid_argument("make_problem: m must be in 2..15");
    }
    const int index = params.index;
    ProblemSpec spec;
    spec.m = m;
    switch (params.family) {
    case Family::DTLZ:
        if (index < 1 || index > 4) {
            throw std::invalid_argument("make_problem: DTLZ index must be in 1..4");
        }
        spec.objectives = [index, m](std::span<const double> x) { return dtlz(index, x, m); };
        break;
    case Family::CDTLZ: {
        const int base = cdtlz_base(index);
        spec.constrained = true;
        spec.objectives = [base, m](std::span<const double> x) { return dtlz(base, x, m); };
        spec.constraints = [index](std::span<const double>, std::span<const double> f) {
            return cdtlz_constraints(index, f);
        };
        break;
    }
    case Family::WFG: {
        if (index < 1 || index > 9) {
            throw std::invalid_argument("make_problem: WFG index must be in 1..9");
        }
        const std::size_t k = params.resolved_k();
        if (k % (m - 1) != 0) {
            throw std::invalid_argument("make_problem: WFG k must be a multiple of m-1");
        }
        if ((index == 2 || index == 3) && params.resolved_l() % 2 != 0) {
            throw std::invalid_argument("make_problem: WFG2/WFG3 need an even l");
        }
        spec.objectives = [index, m, k](std::span<const double> z) { return wfg::evaluate(index, z, m, k); };
        break;
    }
    }
    spec.name = params.name();
    spec.n = params.variable_count();
    spec.lower.assign(spec.n, 0.0);
    spec.upper.assign(spec.n, 1.0);
    if (params.family == Family::WFG) {
        for (std::size_t i = 0; i < spec.n; ++i) {
            spec.upper[i] = 2.0 * static_cast<double>(i + 1);
        }
    }
    spec.validate();
    return spec;
}

ConstraintValues evaluate_constraints(const ProblemSpec& problem, std::span<const double> x,
                                      std::span<const double> f) {
    if (!problem.constrained || !problem.constraints) {
        throw std::invalid_argument("evaluate_constraints: " + problem.name + " is unconstrained");
    }
    return problem.constraints(x, f);
}

} // namespace andopt
