#include "catch_amalgamated.hpp"

#include "ceopt/benchmarks/registry.hpp"
#include "ceopt/pareto.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

using namespace ceopt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double at(Problem const& p, std::vector<double> const& x)
{
    EvaluationCounter c;
    return evaluate(p, x, c);
}

std::vector<double> at_mo(Problem const& p, std::vector<double> const& x)
{
    EvaluationCounter c;
    return evaluate_mo(p, x, c);
}

std::string slurp(std::string const& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("every listed id builds a problem of the right kind", "[benchmarks]")
{
    for (auto const& id : single_problem_ids()) {
        auto const p = make_problem(id);
        CHECK(p.is_single());
        CHECK(p.num_objectives == 1);
        CHECK(p.bounds.dimension() == p.dimension);
    }
    for (auto const& id : multi_problem_ids()) {
        auto const p = make_problem(id);
        CHECK_FALSE(p.is_single());
        CHECK(p.num_objectives == (id.starts_with("DTLZ") ? 3U : 2U));
    }
    CHECK_THROWS_AS(make_problem("F21"), LookupError);
    CHECK_THROWS_AS(make_problem("DTLZ2", 2), DimensionError);
}

TEST_CASE("dimensions follow the benchmark table", "[benchmarks]")
{
    std::map<std::string, std::size_t> const dims { { "F1", 1 }, { "F2", 1 }, { "F3", 1 }, { "F4", 2 }, { "F5", 2 },
        { "F6", 2 }, { "F7", 2 }, { "F8", 3 }, { "F9", 3 }, { "F10", 2 }, { "F11", 2 }, { "F12", 2 }, { "F13", 2 },
        { "F14", 3 }, { "F15", 3 }, { "F16", 5 }, { "F17", 5 }, { "F18", 10 }, { "F19", 10 }, { "F20", 20 } };
    for (auto const& [id, d] : dims) {
        CHECK(make_problem(id).dimension == d);
    }
    CHECK(make_problem("ZDT1").dimension == 30);
    CHECK(make_problem("ZDT1", 50).dimension == 50);
    CHECK(make_problem("SCHAFFER").dimension == 1);
    CHECK(make_problem("FONSECA").dimension == 2);
}

TEST_CASE("evaluation counts, checks bounds and rejects the wrong kind", "[benchmarks]")
{
    auto const f2 = make_problem("F2");
    EvaluationCounter c;
    evaluate(f2, std::vector<double> { 0.5 }, c);
    evaluate(f2, std::vector<double> { 0.1 }, c);
    CHECK(c.count() == 2);
    CHECK_THROWS_AS(evaluate(f2, std::vector<double> { 1.5 }, c), DomainError);
    CHECK_THROWS_AS(evaluate(f2, std::vector<double> { 0.5, 0.5 }, c), DimensionError);
    CHECK(c.count() == 2);
    CHECK_THROWS_AS(evaluate_mo(f2, std::vector<double> { 0.5 }, c), StateError);

    auto const z = make_problem("ZDT1");
    evaluate_mo(z, std::vector<double>(30, 0.5), c);
    CHECK(c.count() == 3);
    CHECK_THROWS_AS(evaluate(z, std::vector<double>(30, 0.5), c), StateError);
}

TEST_CASE("Himmelblau optima share the global value", "[benchmarks]")
{
    auto const p = make_problem("F4");
    double const top = at(p, { 3.0, 2.0 });
    CHECK(top == 200.0);
    for (auto const& x : known_optima("F4").global_optima) {
        CHECK_THAT(at(p, x), WithinAbs(top, 1e-6));
    }
}

TEST_CASE("camel back optima are symmetric", "[benchmarks]")
{
    auto const p = make_problem("F5");
    auto const reg = known_optima("F5");
    REQUIRE(reg.global_optima.size() == 2);
    CHECK_THAT(at(p, reg.global_optima[0]), WithinAbs(at(p, reg.global_optima[1]), 1e-6));
    CHECK_THAT(reg.optimum_value, WithinAbs(1.031628453489877, 1e-9));
}

TEST_CASE("equal maxima peaks are equal", "[benchmarks]")
{
    auto const p = make_problem("F2");
    for (double x : { 0.1, 0.3, 0.5, 0.7, 0.9 }) {
        CHECK_THAT(at(p, { x }), WithinAbs(1.0, 1e-9));
    }
}

TEST_CASE("five-uneven-peak trap endpoints", "[benchmarks]")
{
    auto const p = make_problem("F1");
    CHECK(at(p, { 0.0 }) == 200.0);
    CHECK(at(p, { 30.0 }) == 200.0);
    CHECK(at(p, { 5.0 }) == 160.0);
    CHECK(at(p, { 2.5 }) == 0.0);
}

TEST_CASE("registry rows match the benchmark table", "[benchmarks]")
{
    struct Row {
        char const* id;
        std::size_t count;
        double radius;
    };
    Row const rows[] = { { "F1", 2, 0.01 }, { "F2", 5, 0.01 }, { "F3", 1, 0.01 }, { "F4", 4, 0.01 },
        { "F5", 2, 0.5 }, { "F6", 18, 0.5 }, { "F7", 36, 0.2 }, { "F8", 81, 0.01 }, { "F9", 216, 0.01 },
        { "F10", 12, 0.01 }, { "F11", 6, 0.01 }, { "F12", 8, 0.01 }, { "F13", 6, 0.01 }, { "F14", 6, 0.01 },
        { "F15", 8, 0.01 }, { "F16", 6, 0.01 }, { "F17", 8, 0.01 }, { "F18", 6, 0.01 }, { "F19", 8, 0.01 },
        { "F20", 8, 0.01 } };
    for (auto const& r : rows) {
        INFO(r.id);
        auto const reg = known_optima(r.id);
        CHECK(reg.count_global == r.count);
        CHECK(reg.niche_radius == r.radius);
        if (reg.has_locations()) {
            CHECK(reg.global_optima.size() == reg.count_global);
        }
        CHECK(reg.accuracy_levels == std::vector<double> { 1e-1, 1e-2, 1e-3, 1e-4, 1e-5 });
    }
    CHECK_THROWS_AS(known_optima("ZDT1"), LookupError);
    CHECK_FALSE(known_optima("F8").note.empty());
}

TEST_CASE("stored optima evaluate to the registry value", "[benchmarks]")
{
    for (auto const& id : single_problem_ids()) {
        auto const reg = known_optima(id);
        auto const p = make_problem(id);
        INFO(id);
        for (auto const& x : reg.global_optima) {
            CHECK_THAT(at(p, x), WithinAbs(reg.optimum_value, 1e-6));
        }
    }
}

TEST_CASE("stored optima are local maxima", "[benchmarks]")
{
    // a small coordinate probe never beats a stored optimum
    for (auto const& id : single_problem_ids()) {
        auto const reg = known_optima(id);
        auto const p = make_problem(id);
        INFO(id);
        for (auto const& x : reg.global_optima) {
            for (std::size_t d = 0; d < x.size(); ++d) {
                for (double h : { -1e-4, 1e-4 }) {
                    auto y = x;
                    y[d] += h;
                    if (p.bounds.contains(y)) {
                        CHECK(at(p, y) <= reg.optimum_value + 1e-9);
                    }
                }
            }
        }
    }
}

TEST_CASE("stored optima are well separated", "[benchmarks]")
{
    // Twice the niche radius where the table allows it. The Shubert and
    // Vincent rows use radii wider than half their closest optimum pair, so
    // there the gate is a single radius.
    std::map<std::string, double> const factor { { "F6", 1.0 }, { "F7", 1.0 } };
    for (auto const& id : single_problem_ids()) {
        auto const reg = known_optima(id);
        double min_sep = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < reg.global_optima.size(); ++i) {
            for (std::size_t j = i + 1; j < reg.global_optima.size(); ++j) {
                min_sep = std::min(min_sep, euclidean_distance(reg.global_optima[i], reg.global_optima[j]));
            }
        }
        double const k = factor.contains(id) ? factor.at(id) : 2.0;
        INFO(id << " min separation " << min_sep);
        CHECK(min_sep > k * reg.niche_radius);
    }
}

TEST_CASE("composite shifts are global maxima of value zero", "[benchmarks]")
{
    std::mt19937_64 gen(1);
    for (int i = 11; i <= 20; ++i) {
        auto const id = "F" + std::to_string(i);
        auto const p = make_problem(id);
        INFO(id);
        std::uniform_real_distribution<double> u(-5.0, 5.0);
        double best_random = -1e300;
        for (int t = 0; t < 2000; ++t) {
            std::vector<double> x(p.dimension);
            for (auto& v : x) {
                v = u(gen);
            }
            double const f = at(p, x);
            CHECK(f <= 1e-9);
            best_random = std::max(best_random, f);
        }
        CHECK(best_random < 0.0);
    }
    for (auto cf : { 1, 2, 3, 4 }) {
        for (std::size_t dim : { 2U, 3U, 5U }) {
            composite::Function const f(cf, dim);
            for (auto const& o : f.data().shifts) {
                CHECK_THAT(f(o), WithinAbs(0.0, 1e-9));
                for (double v : o) {
                    CHECK(std::abs(v) <= composite::shift_range);
                }
            }
        }
    }
}

TEST_CASE("composite rotations are orthonormal", "[benchmarks]")
{
    for (auto cf : { 3, 4 }) {
        auto const data = composite::generate_data(cf, 5);
        for (auto const& m : data.rotations) {
            for (std::size_t i = 0; i < 5; ++i) {
                for (std::size_t j = 0; j < 5; ++j) {
                    double dot = 0.0;
                    for (std::size_t k = 0; k < 5; ++k) {
                        dot += m[i * 5 + k] * m[j * 5 + k];
                    }
                    CHECK_THAT(dot, WithinAbs(i == j ? 1.0 : 0.0, 1e-12));
                }
            }
        }
    }
}

TEST_CASE("evaluation is pure", "[benchmarks]")
{
    std::mt19937_64 gen(3);
    for (auto const& id : single_problem_ids()) {
        auto const p = make_problem(id);
        std::vector<double> x(p.dimension);
        for (std::size_t d = 0; d < x.size(); ++d) {
            x[d] = std::uniform_real_distribution<double>(p.bounds.lower(d), p.bounds.upper(d))(gen);
        }
        CHECK(at(p, x) == at(p, x));
        CHECK(at(p, x) == at(make_problem(id), x));
    }
}

TEST_CASE("multi-objective examples", "[benchmarks]")
{
    auto const z1 = make_problem("ZDT1");
    std::vector<double> x(30, 0.0);
    CHECK(at_mo(z1, x) == std::vector<double> { 0.0, 1.0 });
    x[0] = 1.0;
    CHECK(at_mo(z1, x) == std::vector<double> { 1.0, 0.0 });
    CHECK(at_mo(make_problem("SCHAFFER"), { 0.0 }) == std::vector<double> { 0.0, 4.0 });

    // DTLZ2 with every distance variable at 0.5 sits on the unit sphere
    auto const d2 = make_problem("DTLZ2", 12);
    std::vector<double> y(12, 0.5);
    y[0] = 0.3;
    y[1] = 0.8;
    auto const f = at_mo(d2, y);
    CHECK_THAT(f[0] * f[0] + f[1] * f[1] + f[2] * f[2], WithinAbs(1.0, 1e-12));

    // DTLZ1 front is the simplex sum = 0.5
    auto const d1 = make_problem("DTLZ1", 7);
    auto const g = at_mo(d1, { 0.2, 0.9, 0.5, 0.5, 0.5, 0.5, 0.5 });
    CHECK_THAT(g[0] + g[1] + g[2], WithinAbs(0.5, 1e-12));
}

TEST_CASE("reference front examples", "[benchmarks]")
{
    auto const z = true_front_samples("ZDT1", 3).points;
    REQUIRE(z.size() == 3);
    CHECK(z[0] == std::vector<double> { 0.0, 1.0 });
    CHECK_THAT(z[1][0], WithinAbs(0.5, 1e-15));
    CHECK_THAT(z[1][1], WithinAbs(1.0 - std::sqrt(0.5), 1e-15));
    CHECK(z[2] == std::vector<double> { 1.0, 0.0 });

    auto const s = true_front_samples("SCHAFFER", 11).points;
    CHECK(s.front() == std::vector<double> { 0.0, 4.0 });
    CHECK(s.back() == std::vector<double> { 4.0, 0.0 });

    CHECK_THROWS_AS(true_front_samples("F1", 10), LookupError);
    CHECK_THROWS_AS(true_front_samples("ZDT1", 0), DomainError);
    CHECK(true_front_samples("DTLZ5", 10).generator.starts_with("numeric"));
    CHECK(true_front_samples("DTLZ2", 10).generator == "analytic");
}

TEST_CASE("reference fronts are mutually non-dominated and attainable", "[benchmarks]")
{
    for (auto const& id : multi_problem_ids()) {
        INFO(id);
        auto const pts = true_front_samples(id, 200).points;
        CHECK(pts.size() == 200);
        auto const fronts = fast_nondominated_sort(pts);
        if (id != "DTLZ5" && id != "DTLZ6") {
            CHECK(fronts.size() == 1);
        }
    }
    // ZDT1/2 samples are reachable by putting the tail at zero
    for (char const* id : { "ZDT1", "ZDT2" }) {
        auto const p = make_problem(id, 5);
        for (auto const& f : true_front_samples(id, 25).points) {
            auto const got = at_mo(p, { f[0], 0.0, 0.0, 0.0, 0.0 });
            CHECK_THAT(got[1], WithinAbs(f[1], 1e-12));
        }
    }
}

TEST_CASE("shipped data files match their generators", "[benchmarks]")
{
    std::string const root = CEOPT_SOURCE_DIR;
    CHECK(slurp(root + "/data/optima_registry.txt") == format_registry());
    CHECK(slurp(root + "/data/composite_data.txt") == format_composite_data());
}
