#include "andopt/harness.hpp"

#include "andopt/stats.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace andopt {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kRecordsFile = "runs.jsonl";
constexpr const char* kSummaryFile = "summary.csv";

std::string read_text(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    auto it = j.find(key);
    return it == j.end() ? fallback : it->get<T>();
}

AlgorithmEntry parse_algorithm(const json& j) {
    AlgorithmEntry a;
    if (j.is_string()) {
        a.config.variant = parse_variant(j.get<std::string>());
        a.id = j.get<std::string>();
        return a;
    }
    const std::string variant = j.at("variant").get<std::string>();
    a.config.variant = parse_variant(variant);
    a.id = get_or<std::string>(j, "id", variant);
    if (j.contains("population_size")) {
        a.population_size = j.at("population_size").get<std::size_t>();
    }
    auto& v = a.config.variation;
    v.p_crossover = get_or(j, "p_crossover", v.p_crossover);
    v.eta_crossover = get_or(j, "eta_crossover", v.eta_crossover);
    v.eta_mutation = get_or(j, "eta_mutation", v.eta_mutation);
    if (j.contains("p_mutation")) {
        v.p_mutation = j.at("p_mutation").get<double>();
    }
    if (j.contains("sde_k")) {
        a.config.sde.k = j.at("sde_k").get<std::size_t>();
    }
    return a;
}

void parse_problems(const json& j, std::vector<ProblemFamilyParams>& out) {
    for (const auto& entry : j) {
        if (entry.is_string()) {
            out.push_back(parse_problem_id(entry.get<std::string>()));
            continue;
        }
        const std::string name = entry.at("name").get<std::string>();
        std::vector<std::size_t> ms;
        const auto& m = entry.at("m");
        if (m.is_array()) {
            ms = m.get<std::vector<std::size_t>>();
        } else {
            ms.push_back(m.get<std::size_t>());
        }
        for (std::size_t mm : ms) {
            ProblemFamilyParams p = parse_problem(name, mm);
            p.k_position = get_or<std::size_t>(entry, "k", 0);
            p.l_distance = get_or<std::size_t>(entry, "l", 0);
            out.push_back(p);
        }
    }
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

double std_of(const std::vector<double>& v, double mean) {
    if (v.size() < 2) {
        return 0.0;
    }
    double s = 0.0;
    for (double x : v) {
        s += (x - mean) * (x - mean);
    }
    return std::sqrt(s / static_cast<double>(v.size() - 1));
}

std::string record_key(std::string_view problem, std::string_view algorithm, std::size_t run) {
    return std::string(problem) + '\t' + std::string(algorithm) + '\t' + std::to_string(run);
}

struct MetricContext {
    PointSet front;
    std::vector<double> upper;
};

void apply_metrics(RunRecord& rec, const PointSet& objectives, const MetricContext& ctx, const HvConfig& hv_cfg) {
    rec.reference_size = ctx.front.size();
    rec.hv_samples = rec.m <= 3 ? 0 : hv_cfg.samples;
    if (objectives.empty()) {
        rec.igd.reset();
        rec.hv.reset();
        return;
    }
    rec.igd = igd(objectives, ctx.front);
    rec.hv = hv(objectives, ctx.upper, hv_cfg);
}

} // namespace

// ---------------------------------------------------------------- config

ExperimentConfig ExperimentConfig::parse(std::string_view text) {
    json j;
    try {
        j = json::parse(text, nullptr, true, true);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        cfg.runs = get_or(j, "runs", cfg.runs);
        cfg.base_seed = get_or(j, "base_seed", cfg.base_seed);
        if (j.contains("output_dir")) {
            cfg.output_dir = j.at("output_dir").get<std::string>();
        }
        if (j.contains("problems")) {
            parse_problems(j.at("problems"), cfg.problems);
        }
        if (j.contains("algorithms")) {
            for (const auto& a : j.at("algorithms")) {
                cfg.algorithms.push_back(parse_algorithm(a));
            }
        }
        if (j.contains("budgets")) {
            for (const auto& [key, value] : j.at("budgets").items()) {
                if (key == "default") {
                    cfg.default_fes = value.get<std::size_t>();
                } else {
                    cfg.fes_overrides[key] = value.get<std::size_t>();
                }
            }
        }
        if (j.contains("population")) {
            for (const auto& [key, value] : j.at("population").items()) {
                cfg.population[std::stoul(key)] = value.get<std::size_t>();
            }
        }
        if (j.contains("metrics")) {
            const auto& mj = j.at("metrics");
            if (mj.contains("reference_size")) {
                cfg.reference_size = mj.at("reference_size").get<std::size_t>();
            }
            if (mj.contains("fronts_dir")) {
                cfg.fronts_dir = mj.at("fronts_dir").get<std::string>();
            }
            cfg.hv.samples = get_or(mj, "hv_samples", cfg.hv.samples);
            cfg.hv.seed = get_or(mj, "hv_seed", cfg.hv.seed);
            cfg.hv.reference_point_factor = get_or(mj, "hv_factor", cfg.hv.reference_point_factor);
        }
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("config: ") + e.what());
    }
    return cfg;
}

ExperimentConfig ExperimentConfig::load(const fs::path& path) { return parse(read_text(path)); }

std::size_t ExperimentConfig::fes_for(const ProblemFamilyParams& problem) const {
    if (auto it = fes_overrides.find(problem_id(problem)); it != fes_overrides.end()) {
        return it->second;
    }
    if (auto it = fes_overrides.find(problem.name()); it != fes_overrides.end()) {
        return it->second;
    }
    return default_fes;
}

std::size_t ExperimentConfig::population_for(const AlgorithmEntry& algo, std::size_t m) const {
    if (algo.population_size) {
        return *algo.population_size;
    }
    auto it = population.find(m);
    if (it == population.end()) {
        throw std::invalid_argument("no population size for m=" + std::to_string(m) + " (algorithm " + algo.id + ")");
    }
    return it->second;
}

fs::path ExperimentConfig::resolved_fronts_dir() const { return fronts_dir ? *fronts_dir : output_dir / "fronts"; }

void ExperimentConfig::validate() const {
    if (runs < 1) {
        throw std::invalid_argument("runs must be at least 1");
    }
    if (problems.empty() || algorithms.empty()) {
        throw std::invalid_argument("config needs at least one problem and one algorithm");
    }
    hv.validate();
    std::set<std::string> ids;
    for (const auto& a : algorithms) {
        if (!ids.insert(a.id).second) {
            throw std::invalid_argument("duplicate algorithm id " + a.id);
        }
    }
    for (const auto& p : problems) {
        const ProblemSpec spec = make_problem(p);
        for (const auto& a : algorithms) {
            if (a.config.variant == Variant::CAnD && !spec.constrained) {
                throw std::invalid_argument(a.id + " needs a constrained problem, got " + spec.name);
            }
            AlgorithmConfig c = a.config;
            c.population_size = population_for(a, p.m);
            c.max_fes = fes_for(p);
            c.validate();
        }
    }
}

std::string problem_id(const ProblemFamilyParams& problem) {
    return problem.name() + "_M" + std::to_string(problem.m);
}

ProblemFamilyParams parse_problem_id(std::string_view id) {
    const auto pos = id.rfind("_M");
    if (pos == std::string_view::npos) {
        throw std::invalid_argument("bad problem id: " + std::string(id));
    }
    std::size_t m = 0;
    const auto digits = id.substr(pos + 2);
    auto res = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("bad problem id: " + std::string(id));
    }
    return parse_problem(id.substr(0, pos), m);
}

std::uint64_t fnv1a64(std::string_view text) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t run_seed(std::uint64_t base, std::string_view problem, std::string_view algorithm, std::size_t run) {
    return (base ^ fnv1a64(problem) ^ fnv1a64(algorithm)) + run;
}

std::vector<Job> expand_jobs(const ExperimentConfig& cfg) {
    std::vector<Job> jobs;
    for (const auto& p : cfg.problems) {
        const std::string pid = problem_id(p);
        for (const auto& a : cfg.algorithms) {
            for (std::size_t r = 0; r < cfg.runs; ++r) {
                Job job;
                job.problem = p;
                job.algorithm = a.id;
                job.run = r;
                job.config = a.config;
                job.config.population_size = cfg.population_for(a, p.m);
                job.config.max_fes = cfg.fes_for(p);
                job.config.seed = run_seed(cfg.base_seed, pid, a.id, r);
                jobs.push_back(std::move(job));
            }
        }
    }
    return jobs;
}

// ---------------------------------------------------------------- records

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string RunRecord::to_json_line() const {
    json j;
    j["problem_id"] = problem_id;
    j["problem"] = problem;
    j["m"] = m;
    j["algorithm"] = algorithm;
    j["run"] = run;
    j["seed"] = seed;
    j["fes"] = fes;
    j["generations"] = generations;
    j["pop_size"] = pop_size;
    j["feasible"] = feasible;
    j["wall_ms"] = wall_ms;
    j["igd"] = igd ? json(*igd) : json(nullptr);
    j["hv"] = hv ? json(*hv) : json(nullptr);
    j["reference_size"] = reference_size;
    j["hv_samples"] = hv_samples;
    j["archive"] = archive;
    return j.dump();
}

RunRecord RunRecord::from_json_line(std::string_view line) {
    const json j = json::parse(line);
    RunRecord r;
    r.problem_id = j.at("problem_id").get<std::string>();
    r.problem = j.at("problem").get<std::string>();
    r.m = j.at("m").get<std::size_t>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.run = j.at("run").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.fes = j.at("fes").get<std::size_t>();
    r.generations = get_or<std::size_t>(j, "generations", 0);
    r.pop_size = j.at("pop_size").get<std::size_t>();
    r.feasible = get_or<std::size_t>(j, "feasible", 0);
    r.wall_ms = get_or<std::int64_t>(j, "wall_ms", 0);
    if (j.contains("igd") && !j.at("igd").is_null()) {
        r.igd = j.at("igd").get<double>();
    }
    if (j.contains("hv") && !j.at("hv").is_null()) {
        r.hv = j.at("hv").get<double>();
    }
    r.reference_size = get_or<std::size_t>(j, "reference_size", 0);
    r.hv_samples = get_or<std::size_t>(j, "hv_samples", 0);
    r.archive = j.at("archive").get<std::string>();
    return r;
}

std::string archive_path(const Job& job) {
    return "populations/" + problem_id(job.problem) + "/" + job.algorithm + "/run_" + std::to_string(job.run) +
           ".txt";
}

std::vector<RunRecord> read_records(const fs::path& results_dir) {
    std::vector<RunRecord> records;
    const fs::path path = results_dir / kRecordsFile;
    if (!fs::exists(path)) {
        return records;
    }
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            records.push_back(RunRecord::from_json_line(line));
        }
    }
    return records;
}

void write_records(const fs::path& results_dir, const std::vector<RunRecord>& records) {
    fs::create_directories(results_dir);
    const fs::path path = results_dir / kRecordsFile;
    const fs::path tmp = results_dir / (std::string(kRecordsFile) + ".tmp");
    {
        std::ofstream out(tmp, std::ios::binary);
        for (const auto& r : records) {
            out << r.to_json_line() << '\n';
        }
        if (!out) {
            throw std::runtime_error("cannot write " + tmp.string());
        }
    }
    fs::rename(tmp, path);
}

PointSet load_reference_front(const ProblemFamilyParams& problem, std::size_t count, const fs::path& fronts_dir) {
    if (!fronts_dir.empty()) {
        const fs::path path = fronts_dir / (problem_id(problem) + ".txt");
        if (fs::exists(path)) {
            PointSet front = read_points_file(path);
            if (front.empty() || front.dim() != problem.m) {
                throw std::runtime_error("reference front " + path.string() + " has the wrong shape");
            }
            return front;
        }
        PointSet front = reference_front(problem, count);
        write_points_file(path, front, problem_id(problem) + " reference front, " + std::to_string(front.size()) +
                                           " points");
        return front;
    }
    return reference_front(problem, count);
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records) {
    std::vector<SummaryRow> rows;
    std::vector<std::vector<double>> igds;
    std::vector<std::vector<double>> hvs;
    std::map<std::string, std::size_t> slot;
    for (const auto& r : records) {
        const std::string key = r.problem_id + '\t' + r.algorithm;
        auto [it, inserted] = slot.emplace(key, rows.size());
        if (inserted) {
            SummaryRow row;
            row.problem = r.problem;
            row.m = r.m;
            row.algorithm = r.algorithm;
            row.fes = r.fes;
            row.pop_size = r.pop_size;
            rows.push_back(row);
            igds.emplace_back();
            hvs.emplace_back();
        }
        const std::size_t s = it->second;
        ++rows[s].runs;
        if (r.igd) {
            igds[s].push_back(*r.igd);
        }
        if (r.hv) {
            hvs[s].push_back(*r.hv);
        }
    }
    for (std::size_t s = 0; s < rows.size(); ++s) {
        rows[s].igd_mean = mean_of(igds[s]);
        rows[s].igd_std = std_of(igds[s], rows[s].igd_mean);
        rows[s].hv_mean = mean_of(hvs[s]);
        rows[s].hv_std = std_of(hvs[s], rows[s].hv_mean);
    }
    return rows;
}

void write_summary_csv(const fs::path& path, const std::vector<SummaryRow>& rows) {
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << "problem,m,algorithm,runs,igd_mean,igd_std,hv_mean,hv_std,fes,pop_size\n";
    for (const auto& r : rows) {
        out << r.problem << ',' << r.m << ',' << r.algorithm << ',' << r.runs << ',' << format_double(r.igd_mean)
            << ',' << format_double(r.igd_std) << ',' << format_double(r.hv_mean) << ','
            << format_double(r.hv_std) << ',' << r.fes << ',' << r.pop_size << '\n';
    }
}

// ---------------------------------------------------------------- run

RunReport run_experiment(const ExperimentConfig& cfg, const RunOptions& options) {
    cfg.validate();
    const fs::path out_dir = cfg.output_dir;
    fs::create_directories(out_dir);

    std::map<std::string, RunRecord> done;
    if (!options.force) {
        for (auto& r : read_records(out_dir)) {
            std::string key = record_key(r.problem_id, r.algorithm, r.run);
            done.emplace(std::move(key), std::move(r));
        }
    }

    const std::vector<Job> jobs = expand_jobs(cfg);
    std::vector<std::size_t> pending;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto key = record_key(problem_id(jobs[i].problem), jobs[i].algorithm, jobs[i].run);
        if (!done.contains(key)) {
            pending.push_back(i);
        }
    }

    // Reference fronts are shared read-only between workers.
    std::map<std::string, MetricContext> contexts;
    for (std::size_t i : pending) {
        const auto& p = jobs[i].problem;
        const std::string pid = problem_id(p);
        if (!contexts.contains(pid)) {
            MetricContext ctx;
            ctx.front = load_reference_front(p, cfg.reference_size.value_or(default_reference_size(p.m)),
                                             cfg.resolved_fronts_dir());
            ctx.upper = upper_bounds(ctx.front);
            contexts.emplace(pid, std::move(ctx));
        }
    }

    std::vector<RunRecord> fresh(jobs.size());
    std::atomic<std::size_t> next{0};
    std::mutex log_mutex;
    std::exception_ptr failure;

    auto worker = [&]() {
        for (;;) {
            const std::size_t slot = next.fetch_add(1);
            if (slot >= pending.size()) {
                return;
            }
            const Job& job = jobs[pending[slot]];
            try {
                const ProblemSpec spec = make_problem(job.problem);
                const RunResult result = run(spec, job.config);
                const PointSet objectives = result.population.objectives();

                RunRecord rec;
                rec.problem_id = problem_id(job.problem);
                rec.problem = job.problem.name();
                rec.m = job.problem.m;
                rec.algorithm = job.algorithm;
                rec.run = job.run;
                rec.seed = job.config.seed;
                rec.fes = result.fes;
                rec.generations = result.generations;
                rec.pop_size = job.config.population_size;
                rec.feasible = static_cast<std::size_t>(std::count_if(
                    result.population.members.begin(), result.population.members.end(),
                    [](const Individual& ind) { return ind.feasible(); }));
                rec.wall_ms = static_cast<std::int64_t>(std::llround(result.wall_ms));
                rec.archive = archive_path(job);
                apply_metrics(rec, objectives, contexts.at(rec.problem_id), cfg.hv);
                write_points_file(out_dir / rec.archive, objectives);
                fresh[pending[slot]] = std::move(rec);

                if (!options.quiet) {
                    std::lock_guard lock(log_mutex);
                    const auto& r = fresh[pending[slot]];
                    std::cerr << r.problem_id << ' ' << r.algorithm << " run " << r.run << ": igd "
                              << format_double(r.igd.value_or(NAN)) << " hv " << format_double(r.hv.value_or(NAN))
                              << " (" << r.wall_ms << " ms)\n";
                }
            } catch (...) {
                std::lock_guard lock(log_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = pending.size();
                return;
            }
        }
    };

    const std::size_t threads = std::max<std::size_t>(1, std::min(options.jobs, pending.size()));
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    // Records for this config come first in job order; unrelated records are kept after them.
    std::vector<RunRecord> all;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        const auto key = record_key(problem_id(jobs[i].problem), jobs[i].algorithm, jobs[i].run);
        seen.insert(key);
        if (auto it = done.find(key); it != done.end()) {
            all.push_back(it->second);
        } else {
            all.push_back(std::move(fresh[i]));
        }
    }
    for (auto& [key, rec] : done) {
        if (!seen.contains(key)) {
            all.push_back(rec);
        }
    }
    write_records(out_dir, all);
    write_summary_csv(out_dir / kSummaryFile, summarize(all));
    return {pending.size(), jobs.size() - pending.size()};
}

void recompute_metrics(const fs::path& results_dir, const fs::path& fronts_dir, const HvConfig& hv_cfg,
                       std::optional<std::size_t> reference_size) {
    std::vector<RunRecord> records = read_records(results_dir);
    if (records.empty()) {
        throw std::runtime_error("no run records in " + results_dir.string());
    }
    std::map<std::string, MetricContext> contexts;
    for (auto& rec : records) {
        auto it = contexts.find(rec.problem_id);
        if (it == contexts.end()) {
            const ProblemFamilyParams p = parse_problem_id(rec.problem_id);
            MetricContext ctx;
            ctx.front = load_reference_front(p, reference_size.value_or(default_reference_size(p.m)), fronts_dir);
            ctx.upper = upper_bounds(ctx.front);
            it = contexts.emplace(rec.problem_id, std::move(ctx)).first;
        }
        const PointSet objectives = read_points_file(results_dir / rec.archive);
        apply_metrics(rec, objectives, it->second, hv_cfg);
    }
    write_records(results_dir, records);
    write_summary_csv(results_dir / kSummaryFile, summarize(records));
}

// ---------------------------------------------------------------- stats

void write_statistics(const fs::path& results_dir, double alpha) {
    const std::vector<RunRecord> records = read_records(results_dir);
    if (records.empty()) {
        throw std::runtime_error("no run records in " + results_dir.string());
    }
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::map<std::pair<std::string, std::string>, std::pair<std::vector<double>, std::vector<double>>> samples;
    for (const auto& r : records) {
        if (std::find(problems.begin(), problems.end(), r.problem_id) == problems.end()) {
            problems.push_back(r.problem_id);
        }
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end()) {
            algorithms.push_back(r.algorithm);
        }
        auto& s = samples[{r.problem_id, r.algorithm}];
        if (r.igd) {
            s.first.push_back(*r.igd);
        }
        if (r.hv) {
            s.second.push_back(*r.hv);
        }
    }

    std::ofstream w(results_dir / "stats_wilcoxon.csv", std::ios::binary);
    w << "metric,algorithm,versus,better,similar,worse\n";
    for (int metric = 0; metric < 2; ++metric) {
        const bool is_igd = metric == 0;
        for (const auto& a : algorithms) {
            for (const auto& b : algorithms) {
                if (a == b) {
                    continue;
                }
                std::size_t counts[3] = {0, 0, 0};
                for (const auto& p : problems) {
                    auto ia = samples.find({p, a});
                    auto ib = samples.find({p, b});
                    if (ia == samples.end() || ib == samples.end()) {
                        continue;
                    }
                    const auto& xa = is_igd ? ia->second.first : ia->second.second;
                    const auto& xb = is_igd ? ib->second.first : ib->second.second;
                    if (xa.size() < 2 || xb.size() < 2) {
                        continue;
                    }
                    const auto res = wilcoxon_rank_sum(xa, xb, alpha, is_igd);
                    ++counts[static_cast<int>(res.outcome)];
                }
                w << (is_igd ? "igd" : "hv") << ',' << a << ',' << b << ',' << counts[0] << ',' << counts[1] << ','
                  << counts[2] << '\n';
            }
        }
    }

    std::ofstream f(results_dir / "stats_friedman.csv", std::ios::binary);
    f << "metric,algorithm,mean_rank,problems,chi_square\n";
    if (algorithms.size() < 2) {
        return;
    }
    for (int metric = 0; metric < 2; ++metric) {
        const bool is_igd = metric == 0;
        std::vector<std::vector<double>> table;
        for (const auto& p : problems) {
            std::vector<double> row;
            for (const auto& a : algorithms) {
                auto it = samples.find({p, a});
                if (it == samples.end()) {
                    break;
                }
                const auto& xs = is_igd ? it->second.first : it->second.second;
                if (xs.empty()) {
                    break;
                }
                row.push_back(mean_of(xs));
            }
            if (row.size() == algorithms.size()) {
                table.push_back(std::move(row));
            }
        }
        if (table.empty()) {
            continue;
        }
        const auto fr = friedman_ranks(table, is_igd);
        for (std::size_t c = 0; c < algorithms.size(); ++c) {
            f << (is_igd ? "igd" : "hv") << ',' << algorithms[c] << ',' << format_double(fr.mean_ranks[c]) << ','
              << table.size() << ',' << format_double(fr.chi_square) << '\n';
        }
    }
}

// ---------------------------------------------------------------- export

std::size_t export_parallel_coordinates(const fs::path& results_dir, std::string_view pid, std::string_view algorithm,
                                        std::optional<std::size_t> run, const fs::path& out_path) {
    std::vector<RunRecord> matches;
    for (auto& r : read_records(results_dir)) {
        if (r.problem_id == pid && r.algorithm == algorithm) {
            matches.push_back(std::move(r));
        }
    }
    if (matches.empty()) {
        throw std::runtime_error("no runs for " + std::string(pid) + " / " + std::string(algorithm));
    }
    const RunRecord* chosen = nullptr;
    if (run) {
        for (const auto& r : matches) {
            if (r.run == *run) {
                chosen = &r;
            }
        }
        if (!chosen) {
            throw std::runtime_error("run " + std::to_string(*run) + " not found");
        }
    } else {
        std::vector<double> values;
        for (const auto& r : matches) {
            values.push_back(r.igd.value_or(0.0));
        }
        std::vector<double> sorted = values;
        std::sort(sorted.begin(), sorted.end());
        const std::size_t n = sorted.size();
        const double med = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
        double best = INFINITY;
        for (std::size_t i = 0; i < matches.size(); ++i) {
            const double d = std::abs(values[i] - med);
            if (d < best) {
                best = d;
                chosen = &matches[i];
            }
        }
    }
    const PointSet objectives = read_points_file(results_dir / chosen->archive);
    if (out_path.has_parent_path()) {
        fs::create_directories(out_path.parent_path());
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + out_path.string());
    }
    for (std::size_t d = 0; d < objectives.dim(); ++d) {
        out << (d ? "," : "") << d + 1;
    }
    out << '\n';
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        for (std::size_t d = 0; d < objectives.dim(); ++d) {
            out << (d ? "," : "") << format_double(objectives(i, d));
        }
        out << '\n';
    }
    return chosen->run;
}

} // namespace andopt
