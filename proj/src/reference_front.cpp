#include "andopt/problems.hpp"

#include "andopt/wfg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

namespace andopt {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    double result = 1.0;
    for (std::size_t i = 1; i <= k; ++i) {
        result = result * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return static_cast<std::size_t>(std::llround(result));
}

void lattice_rec(std::size_t m, std::size_t h, std::size_t left, std::vector<std::size_t>& parts, PointSet& out) {
    const std::size_t d = parts.size();
    if (d + 1 == m) {
        parts.push_back(left);
        std::vector<double> p(m);
        for (std::size_t i = 0; i < m; ++i) {
            p[i] = static_cast<double>(parts[i]) / static_cast<double>(h);
        }
        out.push_back(p);
        parts.pop_back();
        return;
    }
    for (std::size_t c = 0; c <= left; ++c) {
        parts.push_back(c);
        lattice_rec(m, h, left - c, parts, out);
        parts.pop_back();
    }
}

/// Deterministic low-discrepancy points in [0, 1]^dim (Halton, skipping index 0).
PointSet halton(std::size_t dim, std::size_t count) {
    static constexpr std::size_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
    if (dim > std::size(kPrimes)) {
        throw std::invalid_argument("halton: dimension too large");
    }
    PointSet out(0, dim);
    out.reserve(count);
    std::vector<double> p(dim);
    for (std::size_t i = 1; i <= count; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            double f = 1.0;
            double r = 0.0;
            for (std::size_t v = i; v > 0; v /= kPrimes[d]) {
                f /= static_cast<double>(kPrimes[d]);
                r += f * static_cast<double>(v % kPrimes[d]);
            }
            p[d] = r;
        }
        out.push_back(p);
    }
    return out;
}

PointSet nondominated(const PointSet& points) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto pa = points.row(a);
        auto pb = points.row(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });
    // After a lexicographic sort a point can only be dominated by an earlier one.
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
        auto p = points.row(i);
        bool dominated = false;
        for (std::size_t j : kept) {
            auto q = points.row(j);
            bool all_le = true;
            bool any_lt = false;
            for (std::size_t d = 0; d < p.size() && all_le; ++d) {
                all_le = q[d] <= p[d];
                any_lt = any_lt || q[d] < p[d];
            }
            if (all_le && any_lt) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            kept.push_back(i);
        }
    }
    std::sort(kept.begin(), kept.end());
    PointSet out(0, points.dim());
    for (std::size_t i : kept) {
        out.push_back(points.row(i));
    }
    return out;
}

PointSet to_sphere(PointSet directions, double radius = 1.0) {
    for (std::size_t i = 0; i < directions.size(); ++i) {
        auto p = directions.row(i);
        double s = 0.0;
        for (double v : p) {
            s += v * v;
        }
        const double scale = radius / std::sqrt(s);
        for (double& v : p) {
            v *= scale;
        }
    }
    return directions;
}

PointSet wfg_front(int index, std::size_t m, std::size_t count) {
    if (index >= 4) {
        PointSet front = to_sphere(uniform_simplex_points(m, count));
        for (std::size_t i = 0; i < front.size(); ++i) {
            for (std::size_t d = 0; d < m; ++d) {
                front(i, d) *= 2.0 * static_cast<double>(d + 1);
            }
        }
        return front;
    }
    if (index == 3) {
        // Degenerate front: a line parameterized by the first position parameter.
        PointSet front(0, m);
        const std::size_t pts = std::max<std::size_t>(count, 2);
        std::vector<double> x(m - 1, 0.5);
        for (std::size_t i = 0; i < pts; ++i) {
            x[0] = static_cast<double>(i) / static_cast<double>(pts - 1);
            front.push_back(wfg::front_point(3, x, m));
        }
        return front;
    }
    // WFG1 and WFG2: sample the position parameters; WFG2's disconnected front needs filtering.
    for (std::size_t samples = count;; samples *= 2) {
        const PointSet params = halton(m - 1, samples);
        PointSet front(0, m);
        front.reserve(samples);
        for (std::size_t i = 0; i < params.size(); ++i) {
            front.push_back(wfg::front_point(index, params.row(i), m));
        }
        if (index == 2) {
            front = nondominated(front);
        }
        if (front.size() >= count) {
            return front;
        }
    }
}

bool c2_feasible(std::span<const double> f) {
    const std::size_t m = f.size();
    const double r = m == 3 ? 0.4 : 0.5;
    double sum_sq = 0.0;
    for (double v : f) {
        sum_sq += v * v;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        best = std::min(best, sum_sq - f[i] * f[i] + (f[i] - 1.0) * (f[i] - 1.0) - r * r);
    }
    const double centre = 1.0 / std::sqrt(static_cast<double>(m));
    double to_centre = 0.0;
    for (double v : f) {
        to_centre += (v - centre) * (v - centre);
    }
    return std::min(best, to_centre - r * r) <= 0.0;
}

} // namespace

PointSet simplex_lattice(std::size_t m, std::size_t h) {
    if (m < 1 || h < 1) {
        throw std::invalid_argument("simplex_lattice: m and h must be positive");
    }
    PointSet out(0, m);
    out.reserve(binomial(h + m - 1, m - 1));
    std::vector<std::size_t> parts;
    lattice_rec(m, h, h, parts, out);
    return out;
}

PointSet uniform_simplex_points(std::size_t m, std::size_t count) {
    if (m < 2 || count < 1) {
        throw std::invalid_argument("uniform_simplex_points: need m >= 2 and count >= 1");
    }
    std::size_t h = 1;
    while (binomial(h + m - 1, m - 1) < count) {
        ++h;
    }
    if (h >= m) {
        return simplex_lattice(m, h);
    }
    std::size_t h2 = 1;
    while (2 * binomial(h2 + m - 1, m - 1) < count) {
        ++h2;
    }
    PointSet outer = simplex_lattice(m, h2);
    PointSet out = outer;
    const double centre = 1.0 / static_cast<double>(m);
    std::vector<double> p(m);
    for (std::size_t i = 0; i < outer.size(); ++i) {
        for (std::size_t d = 0; d < m; ++d) {
            p[d] = 0.5 * outer(i, d) + 0.5 * centre;
        }
        out.push_back(p);
    }
    return out;
}

std::size_t default_reference_size(std::size_t m) { return m <= 5 ? 5000 : 10000; }

PointSet reference_front(Family family, int index, std::size_t m, std::size_t count) {
    if (m < 2 || count < 1) {
        throw std::invalid_argument("reference_front: need m >= 2 and count >= 1");
    }
    switch (family) {
    case Family::DTLZ:
        if (index == 1) {
            PointSet front = uniform_simplex_points(m, count);
            for (std::size_t i = 0; i < front.size(); ++i) {
                for (double& v : front.row(i)) {
                    v *= 0.5;
                }
            }
            return front;
        }
        if (index >= 2 && index <= 4) {
            return to_sphere(uniform_simplex_points(m, count));
        }
        break;
    case Family::WFG:
        if (index >= 1 && index <= 9) {
            return wfg_front(index, m, count);
        }
        break;
    case Family::CDTLZ:
        if (index == 1) {
            return reference_front(Family::DTLZ, 1, m, count);
        }
        if (index == 2) {
            for (std::size_t target = count;; target *= 2) {
                const PointSet sphere = to_sphere(uniform_simplex_points(m, target));
                PointSet front(0, m);
                for (std::size_t i = 0; i < sphere.size(); ++i) {
                    if (c2_feasible(sphere.row(i))) {
                        front.push_back(sphere.row(i));
                    }
                }
                if (front.size() >= count) {
                    return front;
                }
            }
        }
        if (index == 3) {
            // Each direction is scaled onto the boundary of its binding constraint.
            PointSet front = uniform_simplex_points(m, count);
            for (std::size_t i = 0; i < front.size(); ++i) {
                auto p = front.row(i);
                double sum_sq = 0.0;
                double max_sq = 0.0;
                for (double v : p) {
                    sum_sq += v * v;
                    max_sq = std::max(max_sq, v * v);
                }
                const double scale = 1.0 / std::sqrt(sum_sq - 0.75 * max_sq);
                for (double& v : p) {
                    v *= scale;
                }
            }
            return front;
        }
        break;
    }
    throw std::invalid_argument("reference_front: no analytic front for this problem");
}

PointSet reference_front(const ProblemFamilyParams& params, std::size_t count) {
    return reference_front(params.family, params.index, params.m, count);
}

std::vector<double> upper_bounds(const PointSet& front) {
    if (front.empty()) {
        throw std::invalid_argument("upper_bounds: empty front");
    }
    std::vector<double> ub(front.row(0).begin(), front.row(0).end());
    for (std::size_t i = 1; i < front.size(); ++i) {
        for (std::size_t d = 0; d < front.dim(); ++d) {
            ub[d] = std::max(ub[d], front(i, d));
        }
    }
    return ub;
}

void write_points(std::ostream& out, const PointSet& points, std::string_view comment) {
    if (!comment.empty()) {
        out << "# " << comment << '\n';
    }
    char buf[64];
    for (std::size_t i = 0; i < points.size(); ++i) {
        auto p = points.row(i);
        for (std::size_t d = 0; d < p.size(); ++d) {
            auto res = std::to_chars(buf, buf + sizeof buf, p[d]);
            if (d > 0) {
                out << ' ';
            }
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

PointSet read_points(std::istream& in) {
    PointSet out;
    std::string line;
    std::vector<double> p;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        p.clear();
        const char* cur = line.data() + start;
        const char* end = line.data() + line.size();
        while (cur < end) {
            while (cur < end && (*cur == ' ' || *cur == '\t' || *cur == '\r')) {
                ++cur;
            }
            if (cur == end) {
                break;
            }
            double v = 0.0;
            auto res = std::from_chars(cur, end, v);
            if (res.ec != std::errc{}) {
                throw std::runtime_error("read_points: bad number on line " + std::to_string(line_no));
            }
            p.push_back(v);
            cur = res.ptr;
        }
        if (!out.empty() && p.size() != out.dim()) {
            throw std::runtime_error("read_points: inconsistent dimension on line " + std::to_string(line_no));
        }
        out.push_back(p);
    }
    return out;
}

void write_points_file(const std::filesystem::path& path, const PointSet& points, std::string_view comment) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_points(out, points, comment);
}

PointSet read_points_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    return read_points(in);
}

} // namespace andopt
