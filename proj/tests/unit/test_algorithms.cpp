#include "catch_amalgamated.hpp"

#include "ceopt/ceopt.hpp"

#include <cmath>
#include <set>

using namespace ceopt;

namespace {

AlgoConfig small_config(std::uint64_t seed, std::size_t n = 40, std::uint64_t budget = 4000)
{
    AlgoConfig cfg;
    cfg.population_size = n;
    cfg.evaluation_budget = budget;
    cfg.seed = seed;
    return cfg;
}

double pr_of(std::vector<SingleRunResult> const& runs, std::string const& id, double eps = default_accuracy)
{
    auto const reg = known_optima(id);
    std::vector<std::size_t> npf;
    for (auto const& r : runs) {
        npf.push_back(count_found_peaks(r.peaks, reg, PeakCountParams::from_registry(reg, eps)));
    }
    return peak_ratio(npf, reg.count_global, runs.size());
}

using Runner = SingleRunResult (*)(Problem const&, AlgoConfig const&, GenerationObserver const&);

struct Named {
    char const* name;
    Runner run;
};

Named const runners[] = { { "cedc", run_cedc }, { "ce", ce_baseline }, { "ceca", run_ceca }, { "ga", ga_baseline } };

Problem unimodal()
{
    Problem p;
    p.id = "CONE";
    p.name = "cone";
    p.dimension = 2;
    p.bounds = Bounds::uniform(2, -1.0, 1.0);
    p.scalar = [](std::span<double const> x) { return -std::sqrt(x[0] * x[0] + x[1] * x[1]); };
    return p;
}

AlgoConfig mo_config(std::uint64_t seed)
{
    AlgoConfig cfg;
    cfg.seed = seed;
    return cfg;
}

double front_hv(Population const& pop)
{
    return hypervolume_filtered(first_front(pop), { { 11.0, 11.0 } }).value;
}

} // namespace

TEST_CASE("config defaults and validation", "[algorithms]")
{
    AlgoConfig cfg;
    CHECK(cfg.population_size == 200);
    CHECK(cfg.generations == 10);
    CHECK(cfg.mu == 200);
    CHECK(cfg.lambda == 200);
    CHECK(cfg.cxpb == 0.7);
    CHECK(cfg.mutpb == 0.2);
    CHECK(cfg.budget() == 400000);
    CHECK_NOTHROW(cfg.validate());

    auto bad = cfg;
    bad.cxpb = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.population_size = 1;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.uncertainty_k = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.cluster_radius = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = cfg;
    bad.refine_expand = 1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
}

TEST_CASE("single-objective runners honour budget, size and seed", "[algorithms]")
{
    for (auto const& r : runners) {
        INFO(r.name);
        for (char const* id : { "F2", "F4", "F12" }) {
            auto const p = make_problem(id);
            auto cfg = small_config(3, 30, 3001);
            std::size_t calls = 0;
            std::uint64_t last = 0;
            auto const res = r.run(p, cfg, [&](Population const& pop, std::uint64_t evals) {
                REQUIRE(pop.size() == 30);
                REQUIRE(evals >= last);
                REQUIRE(evals <= 3001);
                last = evals;
                for (auto const& ind : pop) {
                    REQUIRE(p.bounds.contains(ind.genome));
                    REQUIRE(ind.fitness.has_value());
                }
                ++calls;
            });
            CHECK(res.evaluations <= 3001);
            CHECK(res.population.size() == 30);
            CHECK(calls >= 2);
            CHECK(res.peaks.size() == res.clusters.num_clusters());

            auto const again = r.run(p, cfg, {});
            REQUIRE(again.population.size() == res.population.size());
            for (std::size_t i = 0; i < res.population.size(); ++i) {
                REQUIRE(again.population[i].genome == res.population[i].genome);
            }
            CHECK(again.evaluations == res.evaluations);
        }
    }
}

TEST_CASE("single-objective runners reject bad input", "[algorithms]")
{
    auto const f1 = make_problem("F1");
    for (auto const& r : runners) {
        INFO(r.name);
        CHECK_THROWS_AS(r.run(make_problem("ZDT1"), small_config(1), {}), ConfigError);
        CHECK_THROWS_AS(r.run(f1, small_config(1, 40, 39), {}), ConfigError);
        auto cfg = small_config(1);
        cfg.mutpb = -0.1;
        CHECK_THROWS_AS(r.run(f1, cfg, {}), ConfigError);
    }
}

TEST_CASE("a budget of one population only evaluates the initial draw", "[algorithms]")
{
    auto const p = make_problem("F2");
    for (auto const& r : runners) {
        INFO(r.name);
        auto const cfg = small_config(5, 50, 50);
        std::size_t calls = 0;
        auto const res = r.run(p, cfg, [&](Population const&, std::uint64_t) { ++calls; });
        CHECK(calls == 1);
        CHECK(res.evaluations == 50);
        CHECK(res.population.generation == 0);
        auto const expect = persistence_cluster(res.population, known_optima("F2").niche_radius);
        CHECK(res.clusters.vertices == expect.vertices);
    }
}

TEST_CASE("seeds change the outcome", "[algorithms]")
{
    auto const p = make_problem("F4");
    auto const a = run_cedc(p, small_config(1));
    auto const b = run_cedc(p, small_config(2));
    CHECK(a.population[0].genome != b.population[0].genome);
}

TEST_CASE("CEDC finds every peak of the easy functions", "[algorithms]")
{
    for (char const* id : { "F1", "F2", "F3" }) {
        std::vector<SingleRunResult> runs;
        for (std::uint64_t s = 1; s <= 3; ++s) {
            AlgoConfig cfg;
            cfg.seed = s;
            runs.push_back(run_cedc(make_problem(id), cfg));
        }
        INFO(id);
        CHECK(pr_of(runs, id) >= 0.95);
    }
}

TEST_CASE("CE finds both trap peaks", "[algorithms]")
{
    std::vector<SingleRunResult> runs;
    for (std::uint64_t s = 1; s <= 3; ++s) {
        AlgoConfig cfg;
        cfg.seed = s;
        runs.push_back(ce_baseline(make_problem("F1"), cfg));
    }
    CHECK(pr_of(runs, "F1") >= 0.95);
}

TEST_CASE("CECA finds every peak of the modified Rastrigin", "[algorithms]")
{
    std::vector<SingleRunResult> runs;
    for (std::uint64_t s = 1; s <= 2; ++s) {
        AlgoConfig cfg;
        cfg.seed = s;
        runs.push_back(run_ceca(make_problem("F10"), cfg));
    }
    CHECK(pr_of(runs, "F10") >= 0.95);
}

TEST_CASE("CECA on a unimodal landscape returns one vertex at the top", "[algorithms]")
{
    auto const p = unimodal();
    for (std::uint64_t s = 1; s <= 10; ++s) {
        auto cfg = small_config(s, 100, 100 + 100 + 5);
        cfg.cluster_radius = 1.0;
        auto const res = run_ceca(p, cfg);
        REQUIRE(res.peaks.size() == 1);
        double top = -1e300;
        for (auto const& ind : res.population) {
            top = std::max(top, ind.fit());
        }
        CHECK(res.peaks[0].fit() == top);
    }
}

TEST_CASE("GA without variation keeps its best and collapses onto it", "[algorithms]")
{
    auto const p = make_problem("F4");
    auto cfg = small_config(4, 20, 20 * 300);
    cfg.cxpb = 0.0;
    cfg.mutpb = 0.0;
    double best_prev = -1e300;
    double initial_best = 0.0;
    auto const res = ga_baseline(p, cfg, [&](Population const& pop, std::uint64_t) {
        double b = -1e300;
        for (auto const& ind : pop) {
            b = std::max(b, ind.fit());
        }
        if (pop.generation == 0) {
            initial_best = b;
        }
        REQUIRE(b >= best_prev);
        best_prev = b;
    });
    std::set<Genome> distinct;
    for (auto const& ind : res.population) {
        distinct.insert(ind.genome);
        CHECK(ind.fit() == initial_best);
    }
    CHECK(distinct.size() == 1);
}

TEST_CASE("uncertainty score examples", "[algorithms]")
{
    std::vector<Genome> const archive { { 0.0 }, { 1.0 }, { 2.0 }, { 3.0 }, { 4.0 } };
    std::vector<Genome> const on { { 2.0 } };
    CHECK(uncertainty_scores(on, archive, 1) == std::vector<double> { 0.0 });

    std::vector<Genome> const two { { 2.5 }, { 5.0 } };
    auto const s = uncertainty_scores(two, archive, 2);
    CHECK(s[0] == 0.5);
    CHECK(s[1] == 1.5);

    std::vector<Genome> const dense { { 0.0, 0.0 }, { 0.01, 0.0 }, { 0.0, 0.01 }, { 0.01, 0.01 }, { 5.0, 5.0 } };
    std::vector<Genome> const cands { { 0.005, 0.005 }, { 2.5, -2.0 } };
    auto const d = uncertainty_scores(cands, dense, 3);
    CHECK(d[1] > d[0]);

    // k beyond the archive is truncated
    CHECK(uncertainty_scores(on, archive, 50) == uncertainty_scores(on, archive, 5));
    CHECK(uncertainty_scores(on, archive, 5) == std::vector<double> { 1.2 });
    CHECK_THROWS_AS(uncertainty_scores(on, std::vector<Genome> {}, 1), DomainError);
    CHECK_THROWS_AS(uncertainty_scores(on, archive, 0), ConfigError);
}

TEST_CASE("blended scores normalise both terms", "[algorithms]")
{
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> const cd { inf, 1.0, 0.5, inf };
    std::vector<double> const u { 0.0, 2.0, 4.0, 1.0 };
    auto const b = blended_scores(cd, u, 0.5);
    CHECK(b == std::vector<double> { 2.0, 1.25, 1.0, 2.125 });
    CHECK(blended_scores(cd, {}, 0.5) == std::vector<double> { 2.0, 1.0, 0.5, 2.0 });
}

TEST_CASE("multi-objective runners keep the population size and stay reproducible", "[algorithms]")
{
    auto const p = make_problem("ZDT1");
    for (bool cec : { false, true }) {
        INFO((cec ? "cec" : "baseline"));
        auto const cfg = mo_config(3);
        std::size_t calls = 0;
        auto observe = [&](Population const& pop, ParetoArchive const& archive, std::uint64_t) {
            REQUIRE(pop.size() == 200);
            for (auto const& ind : pop) {
                REQUIRE(p.bounds.contains(ind.genome));
                REQUIRE(ind.objectives.has_value());
            }
            auto const& ms = archive.members();
            for (std::size_t i = 0; i < ms.size(); ++i) {
                for (std::size_t j = 0; j < ms.size(); ++j) {
                    REQUIRE_FALSE(dominates(ms[i].objs(), ms[j].objs()));
                }
            }
            ++calls;
        };
        auto const a = cec ? run_cec_nsgaii(p, cfg, observe) : run_nsgaii_baseline(p, cfg, observe);
        CHECK(calls == 11);
        CHECK(a.population.generation == 10);
        auto const b = cec ? run_cec_nsgaii(p, cfg) : run_nsgaii_baseline(p, cfg);
        REQUIRE(a.population.size() == b.population.size());
        for (std::size_t i = 0; i < a.population.size(); ++i) {
            REQUIRE(a.population[i].genome == b.population[i].genome);
        }
        CHECK(a.evaluations == b.evaluations);

        auto const front = first_front(a.population);
        for (auto const& x : front) {
            for (auto const& y : front) {
                REQUIRE_FALSE(dominates(x, y));
            }
        }
    }
}

TEST_CASE("multi-objective runners reject bad input", "[algorithms]")
{
    CHECK_THROWS_AS(run_nsgaii_baseline(make_problem("F1"), mo_config(1)), ConfigError);
    auto cfg = mo_config(1);
    cfg.mu = 1;
    CHECK_THROWS_AS(run_cec_nsgaii(make_problem("ZDT1"), cfg), ConfigError);
    cfg = mo_config(1);
    cfg.lambda = 0;
    CHECK_THROWS_AS(run_nsgaii_baseline(make_problem("ZDT1"), cfg), ConfigError);
}

TEST_CASE("switching every extension off reproduces the baseline", "[algorithms]")
{
    for (char const* id : { "ZDT1", "DTLZ2", "SCHAFFER" }) {
        auto const p = make_problem(id);
        auto cfg = mo_config(7);
        cfg.features = CecFeatures::none();
        auto const a = run_cec_nsgaii(p, cfg);
        auto const b = run_nsgaii_baseline(p, cfg);
        REQUIRE(a.population.size() == b.population.size());
        for (std::size_t i = 0; i < a.population.size(); ++i) {
            REQUIRE(a.population[i].genome == b.population[i].genome);
            REQUIRE(a.population[i].objs() == b.population[i].objs());
        }
    }
}

TEST_CASE("baseline NSGA-II improves on its initial population", "[algorithms]")
{
    auto const p = make_problem("ZDT1");
    int better = 0;
    for (std::uint64_t s = 1; s <= 100; ++s) {
        double initial = 0.0;
        double final_hv = 0.0;
        run_nsgaii_baseline(p, mo_config(s), [&](Population const& pop, ParetoArchive const&, std::uint64_t) {
            (pop.generation == 0 ? initial : final_hv) = front_hv(pop);
        });
        better += final_hv > initial ? 1 : 0;
    }
    CHECK(better >= 95);
}

TEST_CASE("CEC-NSGAII front hypervolume never drops", "[algorithms]")
{
    for (char const* id : { "ZDT1", "ZDT2", "ZDT3" }) {
        auto const p = make_problem(id);
        for (std::uint64_t s = 1; s <= 5; ++s) {
            double prev = -1.0;
            run_cec_nsgaii(p, mo_config(s), [&](Population const& pop, ParetoArchive const&, std::uint64_t) {
                double const hv = front_hv(pop);
                REQUIRE(hv >= prev - 1e-12);
                prev = hv;
            });
        }
    }
}

TEST_CASE("multi-objective cluster radius", "[algorithms]")
{
    auto const p = make_problem("ZDT1", 4);
    AlgoConfig cfg;
    CHECK(mo_cluster_radius(p, cfg) == Catch::Approx(0.2));
    cfg.cluster_radius = 0.3;
    CHECK(mo_cluster_radius(p, cfg) == 0.3);
}
