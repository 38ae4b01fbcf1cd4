#pragma once

#include "andopt/algorithm.hpp"
#include "andopt/core.hpp"
#include "andopt/metrics.hpp"
#include "andopt/problems.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace andopt {

/// One algorithm column of an experiment. An unset population size is
/// looked up by objective count.
struct AlgorithmEntry {
    std::string id;
    AlgorithmConfig config;
    std::optional<std::size_t> population_size;
};

struct ExperimentConfig {
    std::vector<ProblemFamilyParams> problems;
    std::vector<AlgorithmEntry> algorithms;
    std::size_t runs = 20;
    std::uint64_t base_seed = 0;
    std::size_t default_fes = 90'000;
    /// Budget overrides keyed by problem name ("C1-DTLZ1") or problem id ("C1-DTLZ1_M5").
    std::map<std::string, std::size_t> fes_overrides = {{"C1-DTLZ1", 180'000}};
    std::map<std::size_t, std::size_t> population = {{5, 212}, {10, 276}, {15, 136}};
    std::filesystem::path output_dir = "results";
    std::optional<std::filesystem::path> fronts_dir;
    /// Unset means default_reference_size(m).
    std::optional<std::size_t> reference_size;
    HvConfig hv;

    /// Parses the JSON grammar documented in the README. Throws std::runtime_error.
    static ExperimentConfig parse(std::string_view text);
    static ExperimentConfig load(const std::filesystem::path& path);

    /// Checks that every (problem, algorithm) pair resolves; throws std::invalid_argument.
    void validate() const;

    std::size_t fes_for(const ProblemFamilyParams& problem) const;
    std::size_t population_for(const AlgorithmEntry& algo, std::size_t m) const;
    std::filesystem::path resolved_fronts_dir() const;
};

/// "DTLZ2_M5" style identifier.
std::string problem_id(const ProblemFamilyParams& problem);
ProblemFamilyParams parse_problem_id(std::string_view id);

std::uint64_t fnv1a64(std::string_view text) noexcept;

/// (base XOR hash(problem) XOR hash(algorithm)) + run.
std::uint64_t run_seed(std::uint64_t base, std::string_view problem, std::string_view algorithm, std::size_t run);

struct Job {
    ProblemFamilyParams problem;
    std::string algorithm;
    std::size_t run = 0;
    AlgorithmConfig config; // fully resolved, seed included
};

/// Jobs in deterministic order: problems, then algorithms, then runs.
std::vector<Job> expand_jobs(const ExperimentConfig& cfg);

struct RunRecord {
    std::string problem_id;
    std::string problem;
    std::size_t m = 0;
    std::string algorithm;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t fes = 0;
    std::size_t generations = 0;
    std::size_t pop_size = 0;
    std::size_t feasible = 0;
    std::int64_t wall_ms = 0;
    std::optional<double> igd;
    std::optional<double> hv;
    std::size_t reference_size = 0;
    std::size_t hv_samples = 0;
    std::string archive; // relative to the results directory

    std::string to_json_line() const;
    static RunRecord from_json_line(std::string_view line);
};

std::string archive_path(const Job& job);

std::vector<RunRecord> read_records(const std::filesystem::path& results_dir);
void write_records(const std::filesystem::path& results_dir, const std::vector<RunRecord>& records);

/// Reference front for a problem: read from `fronts_dir/<id>.txt` when present,
/// otherwise generated and written there (when fronts_dir is non-empty).
PointSet load_reference_front(const ProblemFamilyParams& problem, std::size_t count,
                              const std::filesystem::path& fronts_dir);

struct SummaryRow {
    std::string problem;
    std::size_t m = 0;
    std::string algorithm;
    std::size_t runs = 0;
    double igd_mean = 0.0;
    double igd_std = 0.0;
    double hv_mean = 0.0;
    double hv_std = 0.0;
    std::size_t fes = 0;
    std::size_t pop_size = 0;
};

/// Mean and sample standard deviation per (problem, m, algorithm), in first-seen order.
std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records);
void write_summary_csv(const std::filesystem::path& path, const std::vector<SummaryRow>& rows);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

struct RunOptions {
    std::size_t jobs = 1;
    bool force = false;
    bool quiet = false;
};

struct RunReport {
    std::size_t executed = 0;
    std::size_t skipped = 0;
};

/// Executes every job not already recorded, archives final populations and
/// rewrites runs.jsonl and summary.csv.
RunReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options);

/// Recomputes metrics of archived populations and rewrites the tables.
void recompute_metrics(const std::filesystem::path& results_dir, const std::filesystem::path& fronts_dir,
                       const HvConfig& hv, std::optional<std::size_t> reference_size = {});

/// Writes stats_wilcoxon.csv and stats_friedman.csv into the results directory.
void write_statistics(const std::filesystem::path& results_dir, double alpha = 0.05);

/// Writes a parallel-coordinates table for one run; without `run`, the run
/// whose IGD is closest to the median is chosen. Returns the run exported.
std::size_t export_parallel_coordinates(const std::filesystem::path& results_dir, std::string_view problem_id,
                                        std::string_view algorithm, std::optional<std::size_t> run,
                                        const std::filesystem::path& out_path);

} // namespace andopt
