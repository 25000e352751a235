#ifndef CEOPT_HARNESS_PLOT_HPP
#define CEOPT_HARNESS_PLOT_HPP

// Whitespace-separated columnar files for external plotting tools.

#include "ceopt/harness/records.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace ceopt::harness {

enum class PlotKind { metric_vs_generation, pareto_front, decision_space };

inline PlotKind parse_plot_kind(std::string const& s)
{
    if (s == "metric_vs_generation") {
        return PlotKind::metric_vs_generation;
    }
    if (s == "pareto_front") {
        return PlotKind::pareto_front;
    }
    if (s == "decision_space") {
        return PlotKind::decision_space;
    }
    throw ConfigError("unknown plot kind: " + s);
}

namespace detail {

    struct Series {
        std::map<std::size_t, std::vector<double>> by_generation;
    };

    // final.csv files below `root` paired with their problem and algorithm
    // directory names.
    struct FinalFile {
        std::filesystem::path path;
        std::string problem;
        std::string algorithm;
    };

    inline std::vector<FinalFile> final_files(std::filesystem::path const& root)
    {
        std::vector<FinalFile> out;
        for (auto const& e : std::filesystem::recursive_directory_iterator(root)) {
            if (e.is_regular_file() && e.path().filename() == "final.csv") {
                auto const algo_dir = e.path().parent_path();
                out.push_back({ e.path(), algo_dir.parent_path().filename().string(), algo_dir.filename().string() });
            }
        }
        std::sort(out.begin(), out.end(), [](auto const& a, auto const& b) { return a.path < b.path; });
        return out;
    }

} // namespace detail

// Writes plot files into <dir>/plots and returns their paths.
//   metric_vs_generation: one file per (problem, algorithm, metric), rows
//                         "generation mean min max" over runs.
//   pareto_front:         final first-front objective vectors, one file per run, "run_id f1 .. fm".
//   decision_space:       final genomes with cluster labels, "run_id label vertex x1 .. xd".
inline std::vector<std::filesystem::path> emit_plot_data(std::filesystem::path const& dir, PlotKind kind)
{
    if (!std::filesystem::is_directory(dir)) {
        throw ConfigError("no such directory: " + dir.string());
    }
    auto const out_dir = dir / "plots";
    std::filesystem::create_directories(out_dir);
    std::vector<std::filesystem::path> written;

    if (kind == PlotKind::metric_vs_generation) {
        std::map<std::tuple<std::string, std::string, std::string>, detail::Series> series;
        for (auto const& r : collect_records(dir)) {
            series[{ r.problem, r.algorithm, r.metric }].by_generation[r.generation].push_back(r.value);
        }
        for (auto const& [key, s] : series) {
            auto const& [problem, algorithm, metric] = key;
            auto const path = out_dir / fmt::format("{}_{}_{}.dat", problem, algorithm, metric);
            std::ofstream out(path, std::ios::binary);
            out << "# generation mean min max\n";
            for (auto const& [g, values] : s.by_generation) {
                double sum = 0.0;
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                for (double v : values) {
                    sum += v;
                    lo = std::min(lo, v);
                    hi = std::max(hi, v);
                }
                out << fmt::format("{} {} {} {}\n", g, format_number(sum / static_cast<double>(values.size())),
                    format_number(lo), format_number(hi));
            }
            written.push_back(path);
        }
        return written;
    }

    for (auto const& f : detail::final_files(dir)) {
        std::ifstream in(f.path, std::ios::binary);
        std::string line;
        std::getline(in, line);
        auto const header = split_csv_line(line);
        bool const multi = header.size() > 2 && header[2] == "rank";
        if (kind == PlotKind::pareto_front && !multi) {
            continue;
        }
        std::size_t m = 0;
        std::size_t first_x = header.size();
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c].starts_with('f') && header[c] != "fitness" && header[c] != "front0") {
                ++m;
            }
            if (header[c].starts_with('x') && first_x == header.size()) {
                first_x = c;
            }
        }
        if (kind == PlotKind::pareto_front) {
            std::string h = "# run_id";
            for (std::size_t k = 0; k < m; ++k) {
                h += fmt::format(" f{}", k + 1);
            }
            std::map<std::string, std::vector<std::string>> rows_by_run;
            while (std::getline(in, line)) {
                auto const c = split_csv_line(line);
                if (line.empty() || c[3] != "1") {
                    continue;
                }
                std::string row = c[0];
                for (std::size_t k = 0; k < m; ++k) {
                    row += " " + c[4 + k];
                }
                rows_by_run[c[0]].push_back(std::move(row));
            }
            std::vector<std::pair<std::size_t, std::string>> runs;
            for (auto const& [run, rows] : rows_by_run) {
                runs.emplace_back(std::stoull(run), run);
            }
            std::sort(runs.begin(), runs.end());
            for (auto const& [num, run] : runs) {
                auto const path = out_dir / fmt::format("{}_{}_pareto_front_run{}.dat", f.problem, f.algorithm, num);
                std::ofstream out(path, std::ios::binary);
                out << h << '\n';
                for (auto const& row : rows_by_run[run]) {
                    out << row << '\n';
                }
                written.push_back(path);
            }
            continue;
        }
        auto const path = out_dir / fmt::format("{}_{}_decision_space.dat", f.problem, f.algorithm);
        std::ofstream out(path, std::ios::binary);
        std::string h = multi ? "# run_id rank front0" : "# run_id label vertex";
        for (std::size_t c = first_x; c < header.size(); ++c) {
            h += " " + header[c];
        }
        out << h << '\n';
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            auto const c = split_csv_line(line);
            std::string row = c[0] + " " + c[2] + " " + c[3];
            for (std::size_t k = first_x; k < c.size(); ++k) {
                row += " " + c[k];
            }
            out << row << '\n';
        }
        written.push_back(path);
    }
    return written;
}

} // namespace ceopt::harness

#endif
