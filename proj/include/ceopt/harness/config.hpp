#ifndef CEOPT_HARNESS_CONFIG_HPP
#define CEOPT_HARNESS_CONFIG_HPP

// Experiment configuration, read from INI-style files:
//
//   [experiment]
//   name = table_pr
//   algorithms = cedc, ga, ce
//   problems = F1, F2, F3
//   runs = 50
//
//   [algorithm]
//   population_size = 200

#include "ceopt/algorithms/config.hpp"
#include "ceopt/benchmarks/problem.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace ceopt::harness {

inline constexpr char const* output_root_env = "CEOPT_OUTPUT_ROOT";

enum class Algorithm { cedc, ceca, ce, ga, nsga2, cec_nsga2 };

struct AlgorithmInfo {
    Algorithm kind;
    char const* id;
    bool multi_objective;
    char const* description;
};

inline std::vector<AlgorithmInfo> const& algorithm_table()
{
    static std::vector<AlgorithmInfo> const table {
        { Algorithm::cedc, "cedc", false, "chaotic evolution with radius-improved deterministic crowding" },
        { Algorithm::ceca, "ceca", false, "chaotic evolution with persistence clustering and vertex refinement" },
        { Algorithm::ce, "ce", false, "plain chaotic evolution (mutant replaces parent if fitter)" },
        { Algorithm::ga, "ga", false, "generational GA with tournament, uniform crossover, reset mutation" },
        { Algorithm::nsga2, "nsga2", true, "NSGA-II baseline with blend crossover and Gaussian mutation" },
        { Algorithm::cec_nsga2, "cec_nsga2", true, "NSGA-II with chaotic, clustering, uncertainty and elite extensions" },
    };
    return table;
}

inline AlgorithmInfo const& algorithm_info(std::string const& id)
{
    for (auto const& a : algorithm_table()) {
        if (id == a.id) {
            return a;
        }
    }
    throw LookupError("unknown algorithm id: " + id);
}

inline AlgorithmInfo const& algorithm_info(Algorithm kind)
{
    for (auto const& a : algorithm_table()) {
        if (a.kind == kind) {
            return a;
        }
    }
    throw LookupError("unknown algorithm");
}

struct ExperimentConfig {
    std::string name = "experiment";
    std::vector<std::string> algorithms;
    std::vector<std::string> problems;
    std::optional<std::size_t> dimension; // multi-objective decision dimension override
    AlgoConfig algo;
    // 0 selects the default: 50 for peak-ratio experiments, 21 for multi-objective ones.
    std::size_t num_runs = 0;
    std::vector<std::string> metrics; // empty selects pr/npf/best or hv/igd
    std::filesystem::path output_dir = "results";
    std::uint64_t seed_base = 1;
    double accuracy = 1e-4;
    std::size_t workers = 1;
    std::size_t record_every = 1;
    std::size_t front_samples = 1000;
    bool write_finals = true;

    [[nodiscard]] bool multi_objective() const
    {
        return !algorithms.empty() && algorithm_info(algorithms.front()).multi_objective;
    }

    [[nodiscard]] std::size_t runs() const
    {
        if (num_runs != 0) {
            return num_runs;
        }
        return multi_objective() ? 21 : 50;
    }

    [[nodiscard]] std::vector<std::string> metric_names() const
    {
        if (!metrics.empty()) {
            return metrics;
        }
        if (multi_objective()) {
            return { "hv", "igd" };
        }
        return { "npf", "pr", "best" };
    }

    void validate() const
    {
        if (name.empty() || name.find_first_of("/\\") != std::string::npos) {
            throw ConfigError("experiment name must be a plain, non-empty directory name");
        }
        if (algorithms.empty()) {
            throw ConfigError("at least one algorithm is required");
        }
        if (problems.empty()) {
            throw ConfigError("at least one problem is required");
        }
        bool const mo = multi_objective();
        for (auto const& a : algorithms) {
            if (algorithm_info(a).multi_objective != mo) {
                throw ConfigError("an experiment cannot mix single- and multi-objective algorithms");
            }
        }
        auto const single = single_problem_ids();
        auto const multi = multi_problem_ids();
        for (auto const& p : problems) {
            auto const& ids = mo ? multi : single;
            if (std::find(ids.begin(), ids.end(), p) == ids.end()) {
                throw LookupError("unknown " + std::string(mo ? "multi-objective" : "single-objective") + " problem id: " + p);
            }
        }
        std::set<std::string> const allowed = mo ? std::set<std::string> { "hv", "igd" }
                                                 : std::set<std::string> { "npf", "pr", "best" };
        for (auto const& m : metric_names()) {
            if (!allowed.contains(m)) {
                throw ConfigError("metric '" + m + "' does not apply to this experiment");
            }
        }
        if (!(accuracy > 0.0)) {
            throw ConfigError("accuracy must be positive");
        }
        if (workers == 0 || record_every == 0 || front_samples == 0) {
            throw ConfigError("workers, record_every and front_samples must be positive");
        }
        algo.validate();
    }
};

namespace detail {

    inline std::string trim(std::string s)
    {
        auto not_space = [](unsigned char c) { return !std::isspace(c); };
        s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
        s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
        return s;
    }

    inline std::vector<std::string> split_list(std::string const& s)
    {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) {
                out.push_back(item);
            }
        }
        return out;
    }

    template <typename T>
    T parse_value(std::string const& key, std::string const& text)
    {
        std::istringstream in(text);
        T v {};
        in >> v;
        if (in.fail() || !(in >> std::ws).eof()) {
            throw ConfigError("bad value for '" + key + "': " + text);
        }
        return v;
    }

    inline bool parse_bool(std::string const& key, std::string const& text)
    {
        if (text == "true" || text == "1" || text == "on" || text == "yes") {
            return true;
        }
        if (text == "false" || text == "0" || text == "off" || text == "no") {
            return false;
        }
        throw ConfigError("bad boolean for '" + key + "': " + text);
    }

    struct Section {
        std::string name;
        std::map<std::string, std::string> values;
        std::set<std::string> used;

        std::optional<std::string> take(std::string const& key)
        {
            auto it = values.find(key);
            if (it == values.end()) {
                return std::nullopt;
            }
            used.insert(key);
            return it->second;
        }

        template <typename T>
        void read(std::string const& key, T& target)
        {
            if (auto v = take(key)) {
                if constexpr (std::is_same_v<T, bool>) {
                    target = parse_bool(name + "." + key, *v);
                } else if constexpr (std::is_same_v<T, std::string>) {
                    target = *v;
                } else {
                    target = parse_value<T>(name + "." + key, *v);
                }
            }
        }

        template <typename T>
        void read(std::string const& key, std::optional<T>& target)
        {
            if (auto v = take(key)) {
                target = parse_value<T>(name + "." + key, *v);
            }
        }

        void reject_unknown() const
        {
            for (auto const& [k, v] : values) {
                if (!used.contains(k)) {
                    throw ConfigError("unknown key '" + k + "' in section [" + name + "]");
                }
            }
        }
    };

} // namespace detail

inline ExperimentConfig parse_config(std::istream& in)
{
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::ini_parser::read_ini(in, tree);
    } catch (boost::property_tree::ini_parser_error const& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    std::map<std::string, detail::Section> sections;
    for (auto const& [name, child] : tree) {
        if (child.empty()) {
            throw ConfigError("config: key '" + name + "' outside any section");
        }
        detail::Section s;
        s.name = name;
        for (auto const& [k, v] : child) {
            s.values[k] = detail::trim(v.data());
        }
        sections[name] = std::move(s);
    }
    for (auto const& [name, s] : sections) {
        if (name != "experiment" && name != "algorithm" && name != "features") {
            throw ConfigError("config: unknown section [" + name + "]");
        }
    }

    ExperimentConfig cfg;
    auto& ex = sections["experiment"];
    ex.name = "experiment";
    ex.read("name", cfg.name);
    if (auto v = ex.take("algorithms")) {
        cfg.algorithms = detail::split_list(*v);
    }
    if (auto v = ex.take("algorithm")) {
        cfg.algorithms.push_back(detail::trim(*v));
    }
    if (auto v = ex.take("problems")) {
        cfg.problems = detail::split_list(*v);
    }
    if (auto v = ex.take("metrics")) {
        cfg.metrics = detail::split_list(*v);
    }
    ex.read("dimension", cfg.dimension);
    ex.read("runs", cfg.num_runs);
    ex.read("seed_base", cfg.seed_base);
    ex.read("accuracy", cfg.accuracy);
    ex.read("workers", cfg.workers);
    ex.read("record_every", cfg.record_every);
    ex.read("front_samples", cfg.front_samples);
    ex.read("write_finals", cfg.write_finals);
    std::string out = cfg.output_dir.string();
    ex.read("output_dir", out);
    cfg.output_dir = out;
    ex.reject_unknown();

    auto& al = sections["algorithm"];
    al.name = "algorithm";
    auto& a = cfg.algo;
    al.read("population_size", a.population_size);
    al.read("evaluation_budget", a.evaluation_budget);
    al.read("generations", a.generations);
    al.read("mu", a.mu);
    al.read("lambda", a.lambda);
    al.read("cxpb", a.cxpb);
    al.read("mutpb", a.mutpb);
    std::optional<double> r_dist;
    std::optional<double> r_fit;
    al.read("dc_r_dist", r_dist);
    al.read("dc_r_fit", r_fit);
    if (r_dist || r_fit) {
        if (!r_dist) {
            throw ConfigError("dc_r_fit requires dc_r_dist");
        }
        a.dc = DCConfig { *r_dist, r_fit.value_or(*r_dist) };
    }
    if (auto v = al.take("pairing")) {
        if (*v == "index") {
            a.pairing = DCPairing::index;
        } else if (*v == "nearest") {
            a.pairing = DCPairing::nearest;
        } else {
            throw ConfigError("pairing must be index or nearest");
        }
    }
    al.read("sigma", a.gaussian.sigma);
    al.read("elite_fraction", a.gaussian.elite_fraction);
    al.read("cluster_radius", a.cluster_radius);
    al.read("mo_cluster_fraction", a.mo_cluster_fraction);
    if (auto v = al.take("chaotic_mode")) {
        if (*v == "offset") {
            a.chaotic.mode = ChaoticMode::offset;
        } else if (*v == "literal") {
            a.chaotic.mode = ChaoticMode::literal;
        } else {
            throw ConfigError("chaotic_mode must be offset or literal");
        }
    }
    al.read("chaotic_width", a.chaotic.width);
    al.read("refine_trials", a.refine_trials);
    al.read("refine_sigma_min", a.refine_sigma_min);
    al.read("refine_sigma_max", a.refine_sigma_max);
    al.read("refine_expand", a.refine_expand);
    al.read("uncertainty_weight", a.uncertainty_weight);
    al.read("uncertainty_k", a.uncertainty_k);
    al.read("sigma_start", a.sigma_start);
    al.read("sigma_end", a.sigma_end);
    al.reject_unknown();

    auto& fe = sections["features"];
    fe.name = "features";
    fe.read("chaotic", a.features.chaotic);
    fe.read("clustering", a.features.clustering);
    fe.read("uncertainty", a.features.uncertainty);
    fe.read("elite_gaussian", a.features.elite_gaussian);
    fe.read("adaptive_sigma", a.features.adaptive_sigma);
    fe.read("sorting", a.features.sorting);
    fe.reject_unknown();

    if (char const* root = std::getenv(output_root_env); root != nullptr && *root != '\0') {
        cfg.output_dir = root;
    }
    cfg.validate();
    return cfg;
}

inline ExperimentConfig load_config(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file " + path.string());
    }
    return parse_config(in);
}

} // namespace ceopt::harness

#endif
