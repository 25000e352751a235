#ifndef CEOPT_BENCHMARKS_REGISTRY_HPP
#define CEOPT_BENCHMARKS_REGISTRY_HPP

#include "ceopt/benchmarks/problem.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace ceopt {

inline std::vector<double> const& default_accuracy_levels()
{
    static std::vector<double> const levels { 1e-1, 1e-2, 1e-3, 1e-4, 1e-5 };
    return levels;
}

inline constexpr double default_accuracy = 1e-4;

struct OptimaRegistry {
    std::string problem_id;
    std::vector<std::vector<double>> global_optima; // empty when locations are unknown
    double optimum_value = 0.0;
    std::size_t count_global = 0;
    double niche_radius = 0.0;
    std::vector<double> accuracy_levels = default_accuracy_levels();
    std::string note;

    [[nodiscard]] bool has_locations() const noexcept { return !global_optima.empty(); }
};

namespace detail {

    template <typename F>
    double golden_max(F&& f, double a, double b, double tol = 1e-13)
    {
        constexpr double inv_phi = 0.6180339887498949;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = f(c);
        double fd = f(d);
        while (b - a > tol) {
            if (fc > fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = f(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = f(d);
            }
        }
        return 0.5 * (a + b);
    }

    struct ShubertExtremes {
        std::vector<double> argmin;
        std::vector<double> argmax;
        double min_value = 0.0;
        double max_value = 0.0;
    };

    inline ShubertExtremes shubert_extremes()
    {
        ShubertExtremes out;
        constexpr double lo = -10.0;
        constexpr double hi = 10.0;
        constexpr double h = 1e-3;
        std::vector<double> mins;
        std::vector<double> maxs;
        auto g = single::shubert_factor;
        for (double x = lo + h; x < hi - h; x += h) {
            double const a = g(x - h);
            double const b = g(x);
            double const c = g(x + h);
            if (b > a && b >= c) {
                maxs.push_back(golden_max(g, x - h, x + h));
            } else if (b < a && b <= c) {
                mins.push_back(golden_max([&](double v) { return -g(v); }, x - h, x + h));
            }
        }
        double vmin = 1e300;
        double vmax = -1e300;
        for (double x : mins) {
            vmin = std::min(vmin, g(x));
        }
        for (double x : maxs) {
            vmax = std::max(vmax, g(x));
        }
        for (double x : mins) {
            if (g(x) - vmin < 1e-9) {
                out.argmin.push_back(x);
            }
        }
        for (double x : maxs) {
            if (vmax - g(x) < 1e-9) {
                out.argmax.push_back(x);
            }
        }
        out.min_value = vmin;
        out.max_value = vmax;
        return out;
    }

    // Shubert in D dims: maxima of -prod g have an odd number of factors at
    // the global minimum of g (one for D=2,3) and the rest at its global maximum.
    inline std::vector<std::vector<double>> shubert_optima(std::size_t dim)
    {
        auto const ext = shubert_extremes();
        std::vector<std::vector<double>> out;
        for (std::size_t neg = 0; neg < dim; ++neg) {
            std::size_t const nmin = ext.argmin.size();
            std::size_t const nmax = ext.argmax.size();
            std::size_t combos = 1;
            for (std::size_t d = 0; d < dim; ++d) {
                combos *= d == neg ? nmin : nmax;
            }
            for (std::size_t c = 0; c < combos; ++c) {
                std::vector<double> x(dim);
                std::size_t rest = c;
                for (std::size_t d = 0; d < dim; ++d) {
                    std::size_t const base = d == neg ? nmin : nmax;
                    x[d] = d == neg ? ext.argmin[rest % base] : ext.argmax[rest % base];
                    rest /= base;
                }
                out.push_back(std::move(x));
            }
        }
        return out;
    }

    inline std::vector<std::vector<double>> vincent_optima(std::size_t dim)
    {
        std::vector<double> roots;
        for (int k = -10; k <= 10; ++k) {
            double const x = std::exp((std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * k) / 10.0);
            if (x >= 0.25 && x <= 10.0) {
                roots.push_back(x);
            }
        }
        std::vector<std::vector<double>> out;
        std::size_t combos = 1;
        for (std::size_t d = 0; d < dim; ++d) {
            combos *= roots.size();
        }
        for (std::size_t c = 0; c < combos; ++c) {
            std::vector<double> x(dim);
            std::size_t rest = c;
            for (std::size_t d = 0; d < dim; ++d) {
                x[d] = roots[rest % roots.size()];
                rest /= roots.size();
            }
            out.push_back(std::move(x));
        }
        return out;
    }

    inline std::map<std::string, OptimaRegistry> build_registry()
    {
        std::map<std::string, OptimaRegistry> reg;
        auto add = [&](std::string id, std::vector<std::vector<double>> locs, double value, std::size_t count,
                       double radius, std::string note = {}) {
            OptimaRegistry r;
            r.problem_id = id;
            r.global_optima = std::move(locs);
            r.optimum_value = value;
            r.count_global = count;
            r.niche_radius = radius;
            r.note = std::move(note);
            reg.emplace(std::move(id), std::move(r));
        };

        add("F1", { { 0.0 }, { 30.0 } }, 200.0, 2, 0.01);
        add("F2", { { 0.1 }, { 0.3 }, { 0.5 }, { 0.7 }, { 0.9 } }, 1.0, 5, 0.01);
        {
            auto f = [](double v) { return single::uneven_decreasing_maxima(std::span<double const>(&v, 1)); };
            double const x = golden_max(f, 0.05, 0.11);
            add("F3", { { x } }, f(x), 1, 0.01);
        }
        add("F4",
            { { 3.0, 2.0 }, { -2.805118086952745, 3.131312518250573 }, { -3.779310253377747, -3.283185991286170 },
                { 3.584428340330492, -1.848126526964404 } },
            200.0, 4, 0.01);
        {
            std::vector<std::vector<double>> locs { { 0.08984201368301331, -0.7126564032704135 },
                { -0.08984201368301331, 0.7126564032704135 } };
            add("F5", locs, single::six_hump_camel_back(locs[0]), 2, 0.5);
        }
        {
            auto locs = shubert_optima(2);
            double const v = single::shubert(locs.front());
            add("F6", std::move(locs), v, 18, 0.5);
        }
        add("F7", vincent_optima(2), 1.0, 36, 0.2);
        {
            auto locs = shubert_optima(3);
            double const v = single::shubert(locs.front());
            add("F8", std::move(locs), v, 81, 0.01,
                "niche radius 0.01 as tabulated; the 2-D Shubert row (F6) uses 0.5 and CEC2013 uses 0.5 for this "
                "function");
        }
        add("F9", vincent_optima(3), 1.0, 216, 0.01,
            "niche radius 0.01 as tabulated; CEC2013 uses 0.2 for this function");
        {
            std::vector<std::vector<double>> locs;
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 4; ++b) {
                    locs.push_back({ (a + 0.5) / 3.0, (b + 0.5) / 4.0 });
                }
            }
            add("F10", std::move(locs), -2.0, 12, 0.01);
        }
        struct Row {
            char const* id;
            std::size_t count;
        };
        static constexpr Row composites[] = { { "F11", 6 }, { "F12", 8 }, { "F13", 6 }, { "F14", 6 },
            { "F15", 8 }, { "F16", 6 }, { "F17", 8 }, { "F18", 6 }, { "F19", 8 }, { "F20", 8 } };
        for (auto const& row : composites) {
            add(row.id, {}, 0.0, row.count, 0.01, "composite: value-only registry");
        }
        return reg;
    }

} // namespace detail

inline std::map<std::string, OptimaRegistry> const& optima_table()
{
    static std::map<std::string, OptimaRegistry> const table = detail::build_registry();
    return table;
}

inline OptimaRegistry known_optima(std::string const& problem_id)
{
    auto const& table = optima_table();
    auto it = table.find(problem_id);
    if (it == table.end()) {
        throw LookupError("no optima registry for problem: " + problem_id);
    }
    return it->second;
}

// Text data file: one block per problem.
//   problem <id>
//   value <optimum value>
//   count <number of global optima>
//   radius <niche radius>
//   optimum <dimension> <x_1> ... <x_D>     (zero or more rows)
//   end
inline std::string format_registry()
{
    std::ostringstream os;
    os.precision(17);
    os << "# ceopt optima registry v1\n";
    for (auto const& id : single_problem_ids()) {
        auto const& r = optima_table().at(id);
        os << "problem " << r.problem_id << '\n';
        if (!r.note.empty()) {
            os << "# " << r.note << '\n';
        }
        os << "value " << r.optimum_value << '\n';
        os << "count " << r.count_global << '\n';
        os << "radius " << r.niche_radius << '\n';
        for (auto const& x : r.global_optima) {
            os << "optimum " << x.size();
            for (double v : x) {
                os << ' ' << v;
            }
            os << '\n';
        }
        os << "end\n";
    }
    return os.str();
}

// Composite data file: shifts and rotations per composite problem.
inline std::string format_composite_data()
{
    std::ostringstream os;
    os.precision(17);
    os << "# ceopt composite data v1 seed " << composite::data_seed << '\n';
    struct Row {
        char const* id;
        int cf;
        std::size_t dim;
    };
    static constexpr Row rows[] = { { "F11", 1, 2 }, { "F12", 2, 2 }, { "F13", 3, 2 }, { "F14", 3, 3 },
        { "F15", 4, 3 }, { "F16", 3, 5 }, { "F17", 4, 5 }, { "F18", 3, 10 }, { "F19", 4, 10 }, { "F20", 4, 20 } };
    for (auto const& row : rows) {
        auto const data = composite::generate_data(row.cf, row.dim);
        auto const rec = composite::recipe(row.cf);
        os << "problem " << row.id << " cf " << row.cf << " dim " << row.dim << '\n';
        for (std::size_t i = 0; i < data.shifts.size(); ++i) {
            os << "component " << i << ' ' << composite::to_string(rec.components[i]) << " sigma " << rec.sigma[i]
               << " lambda " << rec.lambda[i] << '\n';
            os << "shift";
            for (double v : data.shifts[i]) {
                os << ' ' << v;
            }
            os << '\n';
            for (std::size_t r = 0; r < row.dim; ++r) {
                os << "rot";
                for (std::size_t c = 0; c < row.dim; ++c) {
                    os << ' ' << data.rotations[i][r * row.dim + c];
                }
                os << '\n';
            }
        }
        os << "end\n";
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Reference Pareto fronts

struct FrontSample {
    std::vector<std::vector<double>> points;
    std::string generator; // "analytic" or "numeric:<how>"
};

namespace detail {

    // i-th of n evenly spaced parameters in [0, 1]
    inline double even(std::size_t i, std::size_t n) { return n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1); }

    // Hammersley-style point i of n in [0,1]^2
    inline std::pair<double, double> lattice2(std::size_t i, std::size_t n)
    {
        double const u = n == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(n - 1);
        double v = 0.0;
        double f = 0.5;
        for (std::size_t k = i; k > 0; k >>= 1U) {
            if ((k & 1U) != 0U) {
                v += f;
            }
            f *= 0.5;
        }
        return { u, v };
    }

} // namespace detail

inline FrontSample true_front_samples(std::string const& problem_id, std::size_t n)
{
    if (n == 0) {
        throw DomainError("true_front_samples: n must be positive");
    }
    FrontSample out;
    out.generator = "analytic";
    auto& pts = out.points;
    if (problem_id == "ZDT1" || problem_id == "ZDT4") {
        for (std::size_t i = 0; i < n; ++i) {
            double const f1 = detail::even(i, n);
            pts.push_back({ f1, 1.0 - std::sqrt(f1) });
        }
    } else if (problem_id == "ZDT2") {
        for (std::size_t i = 0; i < n; ++i) {
            double const f1 = detail::even(i, n);
            pts.push_back({ f1, 1.0 - f1 * f1 });
        }
    } else if (problem_id == "ZDT3") {
        static constexpr double segments[][2] = { { 0.0, 0.0830015349 }, { 0.1822287280, 0.2577623634 },
            { 0.4093136748, 0.4538821041 }, { 0.6183967944, 0.6525117038 }, { 0.8233317983, 0.8518328654 } };
        double total = 0.0;
        for (auto const& s : segments) {
            total += s[1] - s[0];
        }
        for (std::size_t i = 0; i < n; ++i) {
            double t = detail::even(i, n) * total;
            double f1 = segments[4][1];
            for (auto const& s : segments) {
                if (t <= s[1] - s[0]) {
                    f1 = s[0] + t;
                    break;
                }
                t -= s[1] - s[0];
            }
            pts.push_back({ f1, 1.0 - std::sqrt(f1) - f1 * std::sin(10.0 * std::numbers::pi * f1) });
        }
    } else if (problem_id == "ZDT6") {
        constexpr double f1_min = 0.2807753191;
        for (std::size_t i = 0; i < n; ++i) {
            double const f1 = f1_min + (1.0 - f1_min) * detail::even(i, n);
            pts.push_back({ f1, 1.0 - f1 * f1 });
        }
    } else if (problem_id == "DTLZ1") {
        for (std::size_t i = 0; i < n; ++i) {
            auto [u, v] = detail::lattice2(i, n);
            pts.push_back({ 0.5 * u * v, 0.5 * u * (1.0 - v), 0.5 * (1.0 - u) });
        }
    } else if (problem_id == "DTLZ2" || problem_id == "DTLZ3" || problem_id == "DTLZ4") {
        for (std::size_t i = 0; i < n; ++i) {
            auto [u, v] = detail::lattice2(i, n);
            double const a = u * multi::half_pi;
            double const b = v * multi::half_pi;
            pts.push_back({ std::cos(a) * std::cos(b), std::cos(a) * std::sin(b), std::sin(a) });
        }
    } else if (problem_id == "DTLZ5" || problem_id == "DTLZ6") {
        // Degenerate curve: evaluate the problem itself at g = 0 while sweeping x1.
        auto const problem = make_problem(problem_id, 3);
        double const xm = problem_id == "DTLZ5" ? 0.5 : 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> x { detail::even(i, n), 0.0, xm };
            std::vector<double> f(3);
            problem.vector(x, f);
            pts.push_back(f);
        }
        out.generator = problem_id == "DTLZ5" ? "numeric:dtlz5-g0-sweep" : "numeric:dtlz6-g0-sweep";
    } else if (problem_id == "SCHAFFER") {
        for (std::size_t i = 0; i < n; ++i) {
            double const x = 2.0 * detail::even(i, n);
            pts.push_back({ x * x, (x - 2.0) * (x - 2.0) });
        }
    } else if (problem_id == "FONSECA") {
        double const c = 1.0 / std::sqrt(2.0);
        for (std::size_t i = 0; i < n; ++i) {
            double const t = -c + 2.0 * c * detail::even(i, n);
            double const a = 2.0 * (t - c) * (t - c);
            double const b = 2.0 * (t + c) * (t + c);
            pts.push_back({ 1.0 - std::exp(-a), 1.0 - std::exp(-b) });
        }
    } else {
        throw LookupError("no reference front for problem: " + problem_id);
    }
    return out;
}

} // namespace ceopt

#endif
