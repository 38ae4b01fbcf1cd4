#include "andopt/algorithm.hpp"
#include "andopt/geometry.hpp"
#include "andopt/metrics.hpp"
#include "andopt/problems.hpp"
#include "andopt/sde.hpp"
#include "andopt/selection.hpp"
#include "andopt/stats.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace pybind11::literals;

using Rows = std::vector<std::vector<double>>;

namespace {

andopt::PointSet to_points(const Rows& rows) {
    if (rows.empty()) {
        throw py::value_error("empty point set");
    }
    for (const auto& r : rows) {
        if (r.size() != rows.front().size()) {
            throw py::value_error("ragged point set");
        }
    }
    return andopt::PointSet(rows);
}

andopt::SdeParams sde_params(std::optional<std::size_t> k) {
    andopt::SdeParams p;
    p.k = k;
    return p;
}

std::vector<std::size_t> select_indices(const std::string& variant, const Rows& objectives, std::size_t n,
                                std::optional<std::size_t> k) {
    const auto points = to_points(objectives);
    switch (andopt::parse_variant(variant)) {
    case andopt::Variant::AnD:
        return andopt::select_and(points, n, sde_params(k));
    case andopt::Variant::AnDWoA:
        return andopt::select_woa(points, n, sde_params(k));
    case andopt::Variant::AnDWoD:
        return andopt::select_wod(points, n);
    case andopt::Variant::CAnD:
        break;
    }
    throw py::value_error("select: C-AnD needs constraint values; use run()");
}

double sde(const Rows& objectives, std::size_t target, std::optional<std::size_t> k, bool normalize) {
    const auto pop = andopt::Population::from_objectives(objectives);
    const auto frame = normalize ? andopt::compute_frame(pop) : andopt::NormalizationFrame::identity(pop[0].f.size());
    return andopt::sde_density(target, pop, frame, sde_params(k));
}

py::dict run(const std::string& problem, std::size_t m, const std::string& variant, std::size_t population_size,
             std::size_t max_fes, std::uint64_t seed) {
    const auto spec = andopt::make_problem(problem, m);
    andopt::AlgorithmConfig cfg;
    cfg.variant = andopt::parse_variant(variant);
    cfg.population_size = population_size;
    cfg.max_fes = max_fes;
    cfg.seed = seed;
    andopt::RunResult result;
    {
        py::gil_scoped_release release;
        result = andopt::run(spec, cfg);
    }
    Rows x;
    std::vector<double> cv;
    for (const auto& ind : result.population.members) {
        x.push_back(ind.x);
        cv.push_back(ind.cv.value_or(0.0));
    }
    return py::dict("objectives"_a = result.population.objectives().to_rows(), "x"_a = x, "cv"_a = cv,
                    "fes"_a = result.fes, "generations"_a = result.generations, "seed"_a = result.seed);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "AnD many-objective optimizer: problems, selection, metrics";

    m.def("evaluate", [](const std::string& problem, std::size_t nobj, const std::vector<double>& x) {
        const auto spec = andopt::make_problem(problem, nobj);
        if (x.size() != spec.n) {
            throw py::value_error("expected " + std::to_string(spec.n) + " decision variables");
        }
        return andopt::evaluate(spec, x).f;
    }, "problem"_a, "m"_a, "x"_a, "Objective vector of a benchmark problem.");

    m.def("variable_count", [](const std::string& problem, std::size_t nobj) {
        return andopt::parse_problem(problem, nobj).variable_count();
    }, "problem"_a, "m"_a);

    m.def("reference_front", [](const std::string& problem, std::size_t nobj, std::optional<std::size_t> count) {
        const auto params = andopt::parse_problem(problem, nobj);
        return andopt::reference_front(params, count.value_or(andopt::default_reference_size(nobj))).to_rows();
    }, "problem"_a, "m"_a, "count"_a = py::none());

    m.def("select", &select_indices, "variant"_a, "objectives"_a, "n"_a, "k"_a = py::none(),
          "Indices of the survivors, ascending.");
    m.def("sde_density", &sde, "objectives"_a, "target"_a, "k"_a = py::none(), "normalize"_a = true);
    m.def("vector_angle", [](const std::vector<double>& a, const std::vector<double>& b) {
        if (a.size() != b.size()) {
            throw py::value_error("dimension mismatch");
        }
        return andopt::vector_angle(a, b);
    }, "a"_a, "b"_a);

    m.def("igd", [](const Rows& approx, const Rows& reference) {
        return andopt::igd(to_points(approx), to_points(reference));
    }, "approx"_a, "reference"_a);
    m.def("hv", [](const Rows& approx, const std::vector<double>& upper, std::size_t samples, std::uint64_t seed) {
        andopt::HvConfig cfg;
        cfg.samples = samples;
        cfg.seed = seed;
        return andopt::hv(to_points(approx), upper, cfg);
    }, "approx"_a, "upper_bounds"_a, "samples"_a = andopt::HvConfig{}.samples, "seed"_a = andopt::HvConfig{}.seed);

    m.def("run", &run, "problem"_a, "m"_a, "variant"_a = "AnD", "population_size"_a = 100, "max_fes"_a = 90000,
          "seed"_a = 0);

    m.def("wilcoxon_rank_sum", [](const std::vector<double>& a, const std::vector<double>& b, double alpha,
                                  bool smaller_is_better) {
        const auto r = andopt::wilcoxon_rank_sum(a, b, alpha, smaller_is_better);
        return py::dict("outcome"_a = std::string(andopt::to_string(r.outcome)), "p_value"_a = r.p_value,
                        "statistic"_a = r.statistic);
    }, "a"_a, "b"_a, "alpha"_a = 0.05, "smaller_is_better"_a = true);
    m.def("friedman_ranks", [](const Rows& table, bool smaller_is_better) {
        return andopt::friedman_ranks(table, smaller_is_better).mean_ranks;
    }, "table"_a, "smaller_is_better"_a = true);
}
