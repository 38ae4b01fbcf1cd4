#include "andopt/wfg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace andopt::wfg {

namespace {

constexpr double kPi = std::numbers::pi;

// Absorbs rounding just outside [0, 1].
double correct_to_01(double a) { return std::clamp(a, 0.0, 1.0); }

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

} // namespace

double b_poly(double y, double alpha) { return correct_to_01(std::pow(y, alpha)); }

double b_flat(double y, double a, double b, double c) {
    const double tmp1 = std::min(0.0, std::floor(y - b)) * a * (b - y) / b;
    const double tmp2 = std::min(0.0, std::floor(c - y)) * (1.0 - a) * (y - c) / (1.0 - c);
    return correct_to_01(a + tmp1 - tmp2);
}

double b_param(double y, double u, double a, double b, double c) {
    const double v = a - (1.0 - 2.0 * u) * std::abs(std::floor(0.5 - u) + a);
    return correct_to_01(std::pow(y, b + (c - b) * v));
}

double s_linear(double y, double a) {
    return correct_to_01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c) {
    const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct_to_01(1.0 + (std::abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c) {
    const double tmp1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double tmp2 = (4.0 * a + 2.0) * kPi * (0.5 - tmp1);
    return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_nonsep(std::span<const double> y, std::size_t a) {
    const std::size_t n = y.size();
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) {
            num += std::abs(y[j] - y[(1 + j + k) % n]);
        }
    }
    const double half = std::ceil(static_cast<double>(a) / 2.0);
    const double den = static_cast<double>(n) / static_cast<double>(a) * half * (1.0 + 2.0 * a - 2.0 * half);
    return correct_to_01(num / den);
}

namespace {

template <class Inner, class Last>
double shape(std::span<const double> x, std::size_t i, std::size_t m, Inner inner, Last last) {
    double result = 1.0;
    for (std::size_t j = 0; j + i < m; ++j) {
        result *= inner(x[j]);
    }
    if (i > 1) {
        result *= last(x[m - i]);
    }
    return correct_to_01(result);
}

} // namespace

double linear(std::span<const double> x, std::size_t i, std::size_t m) {
    return shape(x, i, m, [](double v) { return v; }, [](double v) { return 1.0 - v; });
}

double convex(std::span<const double> x, std::size_t i, std::size_t m) {
    return shape(
        x, i, m, [](double v) { return 1.0 - std::cos(v * kPi / 2.0); },
        [](double v) { return 1.0 - std::sin(v * kPi / 2.0); });
}

double concave(std::span<const double> x, std::size_t i, std::size_t m) {
    return shape(
        x, i, m, [](double v) { return std::sin(v * kPi / 2.0); }, [](double v) { return std::cos(v * kPi / 2.0); });
}

double mixed(std::span<const double> x, double a, double alpha) {
    const double tmp = 2.0 * a * kPi;
    return correct_to_01(std::pow(1.0 - x[0] - std::cos(tmp * x[0] + kPi / 2.0) / tmp, alpha));
}

double disc(std::span<const double> x, double a, double alpha, double beta) {
    const double c = std::cos(a * std::pow(x[0], beta) * kPi);
    return correct_to_01(1.0 - std::pow(x[0], alpha) * c * c);
}

namespace {

void check_index(int index) {
    if (index < 1 || index > 9) {
        throw std::invalid_argument("WFG index must be in 1..9");
    }
}

/// Objectives from the reduced parameter vector t (length m): degeneracy, then shape.
std::vector<double> finish(int index, std::span<const double> t, std::size_t m) {
    const double distance = t[m - 1];
    std::vector<double> x(m - 1);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        const double a = (index == 3 && i > 0) ? 0.0 : 1.0;
        x[i] = std::max(distance, a) * (t[i] - 0.5) + 0.5;
    }
    std::vector<double> f(m);
    for (std::size_t i = 1; i <= m; ++i) {
        double h = 0.0;
        if (index == 1) {
            h = i < m ? convex(x, i, m) : mixed(x, 5.0, 1.0);
        } else if (index == 2) {
            h = i < m ? convex(x, i, m) : disc(x, 5.0, 1.0, 1.0);
        } else if (index == 3) {
            h = linear(x, i, m);
        } else {
            h = concave(x, i, m);
        }
        f[i - 1] = distance + 2.0 * static_cast<double>(i) * h;
    }
    return f;
}

/// Weighted-sum reduction of position groups and the distance block into m parameters.
std::vector<double> reduce_sum(std::span<const double> y, std::size_t m, std::size_t k, bool weighted) {
    std::vector<double> w(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        w[i] = weighted ? 2.0 * static_cast<double>(i + 1) : 1.0;
    }
    const std::size_t group = k / (m - 1);
    std::vector<double> t(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t[i] = r_sum(y.subspan(i * group, group), std::span<const double>(w).subspan(i * group, group));
    }
    t[m - 1] = r_sum(y.subspan(k), std::span<const double>(w).subspan(k));
    return t;
}

std::vector<double> reduce_nonsep(std::span<const double> y, std::size_t m, std::size_t k) {
    const std::size_t group = k / (m - 1);
    std::vector<double> t(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t[i] = r_nonsep(y.subspan(i * group, group), group);
    }
    t[m - 1] = r_nonsep(y.subspan(k), y.size() - k);
    return t;
}

} // namespace

std::vector<double> front_point(int index, std::span<const double> x, std::size_t m) {
    check_index(index);
    // On the front the distance parameter is zero, so x passes through as position parameters.
    std::vector<double> t(m, 0.0);
    for (std::size_t i = 0; i + 1 < m; ++i) {
        t[i] = (index == 3 && i > 0) ? 0.5 : x[i];
    }
    return finish(index, t, m);
}

std::vector<double> evaluate(int index, std::span<const double> z, std::size_t m, std::size_t k) {
    check_index(index);
    const std::size_t n = z.size();
    if (m < 2 || k == 0 || k >= n || k % (m - 1) != 0) {
        throw std::invalid_argument("WFG: k must be a positive multiple of m-1 below n");
    }
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i] = z[i] / (2.0 * static_cast<double>(i + 1));
    }
    const std::size_t l = n - k;

    switch (index) {
    case 1: {
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        for (std::size_t i = k; i < n; ++i) {
            y[i] = b_flat(y[i], 0.8, 0.75, 0.85);
        }
        for (double& v : y) {
            v = b_poly(v, 0.02);
        }
        return finish(index, reduce_sum(y, m, k, true), m);
    }
    case 2:
    case 3: {
        if (l % 2 != 0) {
            throw std::invalid_argument("WFG2/WFG3 need an even number of distance variables");
        }
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        std::vector<double> t(k + l / 2);
        std::copy(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k), t.begin());
        for (std::size_t i = 0; i < l / 2; ++i) {
            t[k + i] = r_nonsep(std::span<const double>(y).subspan(k + 2 * i, 2), 2);
        }
        return finish(index, reduce_sum(t, m, k, false), m);
    }
    case 4:
        for (double& v : y) {
            v = s_multi(v, 30.0, 10.0, 0.35);
        }
        return finish(index, reduce_sum(y, m, k, false), m);
    case 5:
        for (double& v : y) {
            v = s_decept(v, 0.35, 0.001, 0.05);
        }
        return finish(index, reduce_sum(y, m, k, false), m);
    case 6:
        for (std::size_t i = k; i < n; ++i) {
            y[i] = s_linear(y[i], 0.35);
        }
        return finish(index, reduce_nonsep(y, m, k), m);
    case 7: {
        std::vector<double> t = y;
        for (std::size_t i = 0; i < k; ++i) {
            const auto rest = std::span<const double>(y).subspan(i + 1);
            t[i] = b_param(y[i], r_sum(rest, ones(rest.size())), 0.98 / 49.98, 0.02, 50.0);
        }
        for (std::size_t i = k; i < n; ++i) {
            t[i] = s_linear(t[i], 0.35);
        }
        return finish(index, reduce_sum(t, m, k, false), m);
    }
    case 8: {
        std::vector<double> t = y;
        for (std::size_t i = k; i < n; ++i) {
            const auto head = std::span<const double>(y).first(i);
            t[i] = b_param(y[i], r_sum(head, ones(head.size())), 0.98 / 49.98, 0.02, 50.0);
        }
        for (std::size_t i = k; i < n; ++i) {
            t[i] = s_linear(t[i], 0.35);
        }
        return finish(index, reduce_sum(t, m, k, false), m);
    }
    case 9: {
        std::vector<double> t = y;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto rest = std::span<const double>(y).subspan(i + 1);
            t[i] = b_param(y[i], r_sum(rest, ones(rest.size())), 0.98 / 49.98, 0.02, 50.0);
        }
        for (std::size_t i = 0; i < k; ++i) {
            t[i] = s_decept(t[i], 0.35, 0.001, 0.05);
        }
        for (std::size_t i = k; i < n; ++i) {
            t[i] = s_multi(t[i], 30.0, 95.0, 0.35);
        }
        return finish(index, reduce_nonsep(t, m, k), m);
    }
    default:
        break;
    }
    throw std::logic_error("unreachable WFG index");
}

} // namespace andopt::wfg
