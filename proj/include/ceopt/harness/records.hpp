#ifndef CEOPT_HARNESS_RECORDS_HPP
#define CEOPT_HARNESS_RECORDS_HPP

#include "ceopt/core.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace ceopt::harness {

inline constexpr char const* records_header
    = "run_id,problem,algorithm,generation,evaluations,metric,value,reference_point,epsilon,radius";
inline constexpr char const* summary_header
    = "problem,algorithm,metric,runs,mean,std,reference_point,epsilon,radius";

struct MetricRecord {
    std::size_t run_id = 0;
    std::string problem;
    std::string algorithm;
    std::size_t generation = 0;
    std::uint64_t evaluations = 0;
    std::string metric;
    double value = 0.0;
    std::string reference_point; // "11;11" for hv, empty otherwise
    std::optional<double> epsilon;
    std::optional<double> radius;

    [[nodiscard]] auto key() const { return std::tie(problem, algorithm, run_id, generation, metric); }
};

// Shortest representation that reads back to the same double.
inline std::string format_number(double v) { return fmt::format("{}", v); }

inline std::string format_reference(std::vector<double> const& ref)
{
    std::string out;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        out += (i ? ";" : "") + format_number(ref[i]);
    }
    return out;
}

inline std::string to_csv_row(MetricRecord const& r)
{
    return fmt::format("{},{},{},{},{},{},{},{},{},{}", r.run_id, r.problem, r.algorithm, r.generation, r.evaluations,
        r.metric, format_number(r.value), r.reference_point, r.epsilon ? format_number(*r.epsilon) : "",
        r.radius ? format_number(*r.radius) : "");
}

inline std::vector<std::string> split_csv_line(std::string const& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

inline MetricRecord parse_csv_row(std::string const& line)
{
    auto const c = split_csv_line(line);
    if (c.size() != 10) {
        throw ConfigError("records: expected 10 columns, got " + std::to_string(c.size()) + ": " + line);
    }
    MetricRecord r;
    r.run_id = std::stoull(c[0]);
    r.problem = c[1];
    r.algorithm = c[2];
    r.generation = std::stoull(c[3]);
    r.evaluations = std::stoull(c[4]);
    r.metric = c[5];
    r.value = std::stod(c[6]);
    r.reference_point = c[7];
    if (!c[8].empty()) {
        r.epsilon = std::stod(c[8]);
    }
    if (!c[9].empty()) {
        r.radius = std::stod(c[9]);
    }
    return r;
}

inline void sort_records(std::vector<MetricRecord>& records)
{
    std::stable_sort(records.begin(), records.end(),
        [](MetricRecord const& a, MetricRecord const& b) { return a.key() < b.key(); });
}

inline void write_records(std::filesystem::path const& path, std::vector<MetricRecord> const& records)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << records_header << '\n';
    for (auto const& r : records) {
        out << to_csv_row(r) << '\n';
    }
}

inline std::vector<MetricRecord> read_records(std::filesystem::path const& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read " + path.string());
    }
    std::string line;
    if (!std::getline(in, line) || line != records_header) {
        throw ConfigError("unexpected records header in " + path.string());
    }
    std::vector<MetricRecord> out;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            out.push_back(parse_csv_row(line));
        }
    }
    return out;
}

// Every records.csv below `root`, in path order.
inline std::vector<MetricRecord> collect_records(std::filesystem::path const& root)
{
    std::vector<std::filesystem::path> files;
    if (std::filesystem::is_regular_file(root)) {
        files.push_back(root);
    } else if (std::filesystem::is_directory(root)) {
        for (auto const& e : std::filesystem::recursive_directory_iterator(root)) {
            if (e.is_regular_file() && e.path().filename() == "records.csv") {
                files.push_back(e.path());
            }
        }
    } else {
        throw ConfigError("no such file or directory: " + root.string());
    }
    std::sort(files.begin(), files.end());
    std::vector<MetricRecord> out;
    for (auto const& f : files) {
        auto part = read_records(f);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::string metric;
    std::size_t runs = 0;
    double mean = 0.0;
    double std = 0.0; // sample standard deviation; 0 for a single run
    std::string reference_point;
    std::optional<double> epsilon;
    std::optional<double> radius;
};

inline double sample_std(std::vector<double> const& v)
{
    if (v.size() < 2) {
        return 0.0;
    }
    double mean = 0.0;
    for (double x : v) {
        mean += x;
    }
    mean /= static_cast<double>(v.size());
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
}

// Mean and sample standard deviation of each run's final-generation value,
// per (problem, algorithm, metric).
inline std::vector<SummaryRow> summarize(std::vector<MetricRecord> const& records)
{
    using Key = std::tuple<std::string, std::string, std::string>;
    std::map<Key, std::map<std::size_t, MetricRecord const*>> last;
    for (auto const& r : records) {
        auto& slot = last[{ r.problem, r.algorithm, r.metric }][r.run_id];
        if (slot == nullptr || r.generation >= slot->generation) {
            slot = &r;
        }
    }
    std::vector<SummaryRow> out;
    for (auto const& [key, runs] : last) {
        SummaryRow row;
        std::tie(row.problem, row.algorithm, row.metric) = key;
        std::vector<double> values;
        for (auto const& [run, rec] : runs) {
            values.push_back(rec->value);
            row.reference_point = rec->reference_point;
            row.epsilon = rec->epsilon;
            row.radius = rec->radius;
        }
        row.runs = values.size();
        double s = 0.0;
        for (double v : values) {
            s += v;
        }
        row.mean = s / static_cast<double>(values.size());
        row.std = sample_std(values);
        out.push_back(std::move(row));
    }
    return out;
}

inline void write_summary(std::filesystem::path const& path, std::vector<SummaryRow> const& rows)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write " + path.string());
    }
    out << summary_header << '\n';
    for (auto const& r : rows) {
        out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.problem, r.algorithm, r.metric, r.runs,
            format_number(r.mean), format_number(r.std), r.reference_point,
            r.epsilon ? format_number(*r.epsilon) : "", r.radius ? format_number(*r.radius) : "");
    }
}

} // namespace ceopt::harness

#endif
