#ifndef CEOPT_HARNESS_EXPERIMENT_HPP
#define CEOPT_HARNESS_EXPERIMENT_HPP

#include "ceopt/algorithms/multi_objective.hpp"
#include "ceopt/algorithms/single_objective.hpp"
#include "ceopt/harness/config.hpp"
#include "ceopt/harness/records.hpp"
#include "ceopt/metrics.hpp"

#include <fmt/chrono.h>
#include <fmt/format.h>

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ceopt::harness {

// Final population of one run, kept for the plot-data files.
struct FinalRow {
    std::size_t run_id = 0;
    std::size_t index = 0;
    std::size_t label = 0; // cluster id (single-objective) or front rank (multi-objective)
    bool vertex = false;
    std::optional<double> fitness;
    std::vector<double> objectives;
    Genome genome;
};

struct RunOutput {
    std::vector<MetricRecord> records;
    std::vector<FinalRow> finals;
    std::string error;
};

struct ExperimentResult {
    std::filesystem::path directory;
    std::vector<MetricRecord> records;
    std::vector<SummaryRow> summary;
    std::size_t failed_runs = 0;
    std::vector<std::string> errors;
};

namespace detail {

    inline bool wants(std::vector<std::string> const& metrics, char const* m)
    {
        return std::find(metrics.begin(), metrics.end(), m) != metrics.end();
    }

    // Generation g is recorded when it is a multiple of `every` or the last one.
    inline bool record_generation(std::size_t g, std::size_t every, bool last)
    {
        return last || (g != 0 && g % every == 0);
    }

    inline RunOutput run_single(ExperimentConfig const& cfg, std::string const& problem_id, std::string const& algorithm,
        std::size_t run_id)
    {
        Problem const problem = make_problem(problem_id);
        OptimaRegistry const& reg = known_optima(problem_id);
        PeakCountParams const params = PeakCountParams::from_registry(reg, cfg.accuracy);
        AlgoConfig algo = cfg.algo;
        algo.seed = cfg.seed_base + run_id;
        double const radius = algo.cluster_radius.value_or(reg.niche_radius);
        auto const metrics = cfg.metric_names();

        RunOutput out;
        auto record = [&](Population const& pop, std::uint64_t evals, std::vector<Individual> const& peaks) {
            std::size_t const npf = count_found_peaks(peaks, reg, params);
            auto add = [&](char const* m, double v, bool pr_fields) {
                MetricRecord r;
                r.run_id = run_id;
                r.problem = problem_id;
                r.algorithm = algorithm;
                r.generation = pop.generation;
                r.evaluations = evals;
                r.metric = m;
                r.value = v;
                if (pr_fields) {
                    r.epsilon = cfg.accuracy;
                    r.radius = reg.niche_radius;
                }
                out.records.push_back(std::move(r));
            };
            if (wants(metrics, "npf")) {
                add("npf", static_cast<double>(npf), true);
            }
            if (wants(metrics, "pr")) {
                add("pr", static_cast<double>(npf) / static_cast<double>(reg.count_global), true);
            }
            if (wants(metrics, "best")) {
                double best = -std::numeric_limits<double>::infinity();
                for (auto const& ind : pop) {
                    best = std::max(best, ind.fit());
                }
                add("best", best, false);
            }
        };
        std::optional<std::size_t> last_recorded;
        auto observe = [&](Population const& pop, std::uint64_t evals) {
            if (record_generation(pop.generation, cfg.record_every, false)) {
                record(pop, evals, cluster_vertices(persistence_cluster(pop, radius), pop));
                last_recorded = pop.generation;
            }
        };
        SingleRunResult res;
        switch (algorithm_info(algorithm).kind) {
        case Algorithm::cedc:
            res = run_cedc(problem, algo, observe);
            break;
        case Algorithm::ceca:
            res = run_ceca(problem, algo, observe);
            break;
        case Algorithm::ce:
            res = ce_baseline(problem, algo, observe);
            break;
        case Algorithm::ga:
            res = ga_baseline(problem, algo, observe);
            break;
        default:
            throw ConfigError(algorithm + " is not a single-objective algorithm");
        }
        if (last_recorded != res.population.generation) {
            record(res.population, res.evaluations, res.peaks);
        }
        if (cfg.write_finals) {
            for (std::size_t i = 0; i < res.population.size(); ++i) {
                auto const& ind = res.population[i];
                out.finals.push_back({ run_id, i, res.clusters.labels[i], res.clusters.is_vertex(i), ind.fitness, {},
                    ind.genome });
            }
        }
        return out;
    }

    inline RunOutput run_multi(ExperimentConfig const& cfg, std::string const& problem_id, std::string const& algorithm,
        std::size_t run_id, std::vector<std::vector<double>> const& reference_front)
    {
        Problem const problem = make_problem(problem_id, cfg.dimension);
        AlgoConfig algo = cfg.algo;
        algo.seed = cfg.seed_base + run_id;
        auto const ref = default_reference_point(problem_id, problem.num_objectives);
        std::string const ref_text = format_reference(ref.coordinates);
        auto const metrics = cfg.metric_names();

        RunOutput out;
        auto observe = [&](Population const& pop, ParetoArchive const&, std::uint64_t evals) {
            bool const last = pop.generation == algo.generations;
            if (!record_generation(pop.generation, cfg.record_every, last)) {
                return;
            }
            auto const front = first_front(pop);
            auto add = [&](char const* m, double v, bool hv) {
                MetricRecord r;
                r.run_id = run_id;
                r.problem = problem_id;
                r.algorithm = algorithm;
                r.generation = pop.generation;
                r.evaluations = evals;
                r.metric = m;
                r.value = v;
                if (hv) {
                    r.reference_point = ref_text;
                }
                out.records.push_back(std::move(r));
            };
            if (wants(metrics, "hv")) {
                add("hv", hypervolume_filtered(front, ref).value, true);
            }
            if (wants(metrics, "igd")) {
                add("igd", igd(front, reference_front), false);
            }
        };
        MultiRunResult res;
        switch (algorithm_info(algorithm).kind) {
        case Algorithm::nsga2:
            res = run_nsgaii_baseline(problem, algo, observe);
            break;
        case Algorithm::cec_nsga2:
            res = run_cec_nsgaii(problem, algo, observe);
            break;
        default:
            throw ConfigError(algorithm + " is not a multi-objective algorithm");
        }
        if (cfg.write_finals) {
            auto const objs = objective_vectors(res.population.members);
            auto const ranks = front_ranks(fast_nondominated_sort(objs), objs.size());
            for (std::size_t i = 0; i < res.population.size(); ++i) {
                out.finals.push_back({ run_id, i, ranks[i], ranks[i] == 0, std::nullopt, objs[i],
                    res.population[i].genome });
            }
        }
        return out;
    }

    inline void write_finals(std::filesystem::path const& path, std::vector<FinalRow> const& rows, bool multi)
    {
        std::ofstream out(path, std::ios::binary);
        if (!out) {
            throw ConfigError("cannot write " + path.string());
        }
        std::size_t const m = rows.empty() ? 0 : rows.front().objectives.size();
        std::size_t const d = rows.empty() ? 0 : rows.front().genome.size();
        std::string header = multi ? "run_id,index,rank,front0" : "run_id,index,label,vertex,fitness";
        for (std::size_t k = 0; k < m; ++k) {
            header += fmt::format(",f{}", k + 1);
        }
        for (std::size_t k = 0; k < d; ++k) {
            header += fmt::format(",x{}", k + 1);
        }
        out << header << '\n';
        for (auto const& r : rows) {
            std::string line = fmt::format("{},{},{},{}", r.run_id, r.index, r.label, r.vertex ? 1 : 0);
            if (!multi) {
                line += "," + format_number(r.fitness.value_or(0.0));
            }
            for (double v : r.objectives) {
                line += "," + format_number(v);
            }
            for (double v : r.genome) {
                line += "," + format_number(v);
            }
            out << line << '\n';
        }
    }

    inline std::string describe_config(ExperimentConfig const& cfg)
    {
        auto const& a = cfg.algo;
        auto join = [](std::vector<std::string> const& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += (i ? ", " : "") + v[i];
            }
            return s;
        };
        std::string s;
        s += fmt::format("[experiment]\nname = {}\nalgorithms = {}\nproblems = {}\nruns = {}\nmetrics = {}\n", cfg.name,
            join(cfg.algorithms), join(cfg.problems), cfg.runs(), join(cfg.metric_names()));
        s += fmt::format("seed_base = {}\naccuracy = {}\nworkers = {}\nrecord_every = {}\nfront_samples = {}\n",
            cfg.seed_base, format_number(cfg.accuracy), cfg.workers, cfg.record_every, cfg.front_samples);
        if (cfg.dimension) {
            s += fmt::format("dimension = {}\n", *cfg.dimension);
        }
        s += fmt::format("\n[algorithm]\npopulation_size = {}\nevaluation_budget = {}\ngenerations = {}\nmu = {}\n"
                         "lambda = {}\ncxpb = {}\nmutpb = {}\n",
            a.population_size, a.budget(), a.generations, a.mu, a.lambda, format_number(a.cxpb),
            format_number(a.mutpb));
        if (a.dc) {
            s += fmt::format("dc_r_dist = {}\ndc_r_fit = {}\n", format_number(a.dc->r_dist), format_number(a.dc->r_fit));
        }
        s += fmt::format("pairing = {}\nsigma = {}\nelite_fraction = {}\n",
            a.pairing == DCPairing::index ? "index" : "nearest", format_number(a.gaussian.sigma),
            format_number(a.gaussian.elite_fraction));
        if (a.cluster_radius) {
            s += fmt::format("cluster_radius = {}\n", format_number(*a.cluster_radius));
        }
        s += fmt::format("mo_cluster_fraction = {}\nchaotic_mode = {}\nchaotic_width = {}\nrefine_trials = {}\n"
                         "refine_sigma_min = {}\nrefine_sigma_max = {}\nrefine_expand = {}\n"
                         "uncertainty_weight = {}\nuncertainty_k = {}\nsigma_start = {}\nsigma_end = {}\n",
            format_number(a.mo_cluster_fraction), a.chaotic.mode == ChaoticMode::offset ? "offset" : "literal",
            format_number(a.chaotic.width), a.refine_trials, format_number(a.refine_sigma_min),
            format_number(a.refine_sigma_max), format_number(a.refine_expand), format_number(a.uncertainty_weight),
            a.uncertainty_k, format_number(a.sigma_start), format_number(a.sigma_end));
        auto const& f = a.features;
        s += fmt::format("\n[features]\nchaotic = {}\nclustering = {}\nuncertainty = {}\nelite_gaussian = {}\n"
                         "adaptive_sigma = {}\nsorting = {}\n",
            f.chaotic, f.clustering, f.uncertainty, f.elite_gaussian, f.adaptive_sigma, f.sorting);
        return s;
    }

} // namespace detail

// Runs every (problem, algorithm, run) combination and writes
//   <output_dir>/<name>/<problem>/<algorithm>/records.csv (+ final.csv)
//   <output_dir>/<name>/summary.csv
//   <output_dir>/<name>/manifest.txt
// Data files depend only on the configuration; timestamps go to the manifest.
inline ExperimentResult run_experiment(ExperimentConfig const& cfg)
{
    cfg.validate();
    auto const started = std::chrono::system_clock::now();
    auto const t0 = std::chrono::steady_clock::now();
    bool const multi = cfg.multi_objective();
    std::size_t const nr = cfg.runs();

    std::map<std::string, std::vector<std::vector<double>>> fronts;
    if (multi && detail::wants(cfg.metric_names(), "igd")) {
        for (auto const& p : cfg.problems) {
            fronts[p] = true_front_samples(p, cfg.front_samples).points;
        }
    }

    struct Task {
        std::string problem;
        std::string algorithm;
        std::size_t run_id;
    };
    std::vector<Task> tasks;
    for (auto const& p : cfg.problems) {
        for (auto const& a : cfg.algorithms) {
            for (std::size_t r = 0; r < nr; ++r) {
                tasks.push_back({ p, a, r });
            }
        }
    }
    std::vector<RunOutput> outputs(tasks.size());
    std::atomic<std::size_t> next { 0 };
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            auto const& t = tasks[i];
            try {
                outputs[i] = multi ? detail::run_multi(cfg, t.problem, t.algorithm, t.run_id, fronts[t.problem])
                                   : detail::run_single(cfg, t.problem, t.algorithm, t.run_id);
            } catch (std::exception const& e) {
                outputs[i] = {};
                outputs[i].error = fmt::format("{} / {} / run {}: {}", t.problem, t.algorithm, t.run_id, e.what());
            }
        }
    };
    std::size_t const nthreads = std::min(cfg.workers, tasks.size());
    if (nthreads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < nthreads; ++k) {
            pool.emplace_back(worker);
        }
    }

    ExperimentResult result;
    result.directory = cfg.output_dir / cfg.name;
    std::filesystem::create_directories(result.directory);
    for (auto const& p : cfg.problems) {
        for (auto const& a : cfg.algorithms) {
            std::vector<MetricRecord> recs;
            std::vector<FinalRow> finals;
            for (std::size_t i = 0; i < tasks.size(); ++i) {
                if (tasks[i].problem != p || tasks[i].algorithm != a) {
                    continue;
                }
                if (!outputs[i].error.empty()) {
                    ++result.failed_runs;
                    result.errors.push_back(outputs[i].error);
                    continue;
                }
                recs.insert(recs.end(), outputs[i].records.begin(), outputs[i].records.end());
                finals.insert(finals.end(), outputs[i].finals.begin(), outputs[i].finals.end());
            }
            sort_records(recs);
            auto const dir = result.directory / p / a;
            std::filesystem::create_directories(dir);
            write_records(dir / "records.csv", recs);
            if (cfg.write_finals) {
                detail::write_finals(dir / "final.csv", finals, multi);
            }
            result.records.insert(result.records.end(), recs.begin(), recs.end());
        }
    }
    result.summary = summarize(result.records);
    write_summary(result.directory / "summary.csv", result.summary);

    auto const wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ofstream manifest(result.directory / "manifest.txt", std::ios::binary);
    manifest << detail::describe_config(cfg);
    manifest << "\n[seeds]\n";
    for (std::size_t r = 0; r < nr; ++r) {
        manifest << fmt::format("run {} = {}\n", r, cfg.seed_base + r);
    }
    manifest << fmt::format("\n[timing]\nstarted = {:%Y-%m-%dT%H:%M:%S}Z\nwall_seconds = {:.3f}\nfailed_runs = {}\n",
        std::chrono::floor<std::chrono::seconds>(started), wall, result.failed_runs);
    for (auto const& e : result.errors) {
        manifest << "error = " << e << '\n';
    }
    return result;
}

} // namespace ceopt::harness

#endif
