// andbench: batch driver for AnD experiments.
#include "andopt/harness.hpp"
#include "andopt/problems.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace fs = std::filesystem;

int main(int argc, char** argv) {
    CLI::App app{"andbench - run, score and compare AnD experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::size_t jobs = 1;
    bool force = false;
    bool quiet = false;
    std::optional<std::uint64_t> seed;

    auto* run_cmd = app.add_subcommand("run", "execute every (problem, algorithm, run) job of a config");
    run_cmd->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--out", out_dir, "results directory (overrides output_dir)");
    run_cmd->add_option("--jobs", jobs, "parallel runs")->check(CLI::PositiveNumber);
    run_cmd->add_flag("--force", force, "re-run jobs that already have a record");
    run_cmd->add_option("--seed", seed, "base seed (overrides base_seed)");
    run_cmd->add_flag("-q,--quiet", quiet, "no per-run progress lines");

    std::string fronts_dir;
    std::size_t hv_samples = andopt::HvConfig{}.samples;
    std::optional<std::size_t> reference_size;
    auto* metrics_cmd = app.add_subcommand("metrics", "recompute IGD/HV of archived populations");
    metrics_cmd->add_option("--out", out_dir, "results directory")->required();
    metrics_cmd->add_option("--fronts", fronts_dir, "reference front directory (default <out>/fronts)");
    metrics_cmd->add_option("--hv-samples", hv_samples, "Monte Carlo samples for m > 3");
    metrics_cmd->add_option("--reference-size", reference_size, "points per generated reference front");
    metrics_cmd->add_option("--seed", seed, "Monte Carlo seed");

    double alpha = 0.05;
    auto* stats_cmd = app.add_subcommand("stats", "rank-sum counts and mean ranks across algorithms");
    stats_cmd->add_option("--out", out_dir, "results directory")->required();
    stats_cmd->add_option("--alpha", alpha, "significance level")->check(CLI::Range(0.0, 1.0));

    std::string problem;
    std::string algorithm;
    std::optional<std::size_t> run_index;
    std::string export_path;
    auto* export_cmd = app.add_subcommand("export-pc", "parallel-coordinates table of one final population");
    export_cmd->add_option("--out", out_dir, "results directory")->required();
    export_cmd->add_option("--problem", problem, "problem id, e.g. DTLZ2_M5")->required();
    export_cmd->add_option("--algorithm", algorithm, "algorithm id")->required();
    export_cmd->add_option("--run", run_index, "run index (default: run with median IGD)");
    export_cmd->add_option("--to", export_path, "output CSV")->required();

    std::size_t m = 3;
    std::optional<std::size_t> count;
    auto* refront_cmd = app.add_subcommand("refront", "write an analytic reference front");
    refront_cmd->add_option("--problem", problem, "problem name, e.g. WFG4")->required();
    refront_cmd->add_option("-m,--objectives", m, "number of objectives")->required();
    refront_cmd->add_option("--count", count, "minimum number of points");
    refront_cmd->add_option("--to", export_path, "output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run_cmd) {
            andopt::ExperimentConfig cfg = andopt::ExperimentConfig::load(config_path);
            if (!out_dir.empty()) {
                cfg.output_dir = out_dir;
            }
            if (seed) {
                cfg.base_seed = *seed;
            }
            const auto report = andopt::run_experiment(cfg, {jobs, force, quiet});
            std::cout << report.executed << " runs executed, " << report.skipped << " already recorded\n";
        } else if (*metrics_cmd) {
            andopt::HvConfig hv;
            hv.samples = hv_samples;
            if (seed) {
                hv.seed = *seed;
            }
            const fs::path fronts = fronts_dir.empty() ? fs::path(out_dir) / "fronts" : fs::path(fronts_dir);
            andopt::recompute_metrics(out_dir, fronts, hv, reference_size);
        } else if (*stats_cmd) {
            andopt::write_statistics(out_dir, alpha);
        } else if (*export_cmd) {
            const std::size_t chosen =
                andopt::export_parallel_coordinates(out_dir, problem, algorithm, run_index, export_path);
            std::cout << "exported run " << chosen << '\n';
        } else if (*refront_cmd) {
            const auto params = andopt::parse_problem(problem, m);
            const auto front = andopt::reference_front(params, count.value_or(andopt::default_reference_size(m)));
            andopt::write_points_file(export_path, front, andopt::problem_id(params));
        }
    } catch (const std::exception& e) {
        std::cerr << "andbench: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
