#ifndef CEOPT_ALGORITHMS_SINGLE_OBJECTIVE_HPP
#define CEOPT_ALGORITHMS_SINGLE_OBJECTIVE_HPP

// Multimodal single-objective optimizers: CEDC, CECA and the CE / GA baselines.

#include "ceopt/algorithms/config.hpp"
#include "ceopt/benchmarks/problem.hpp"
#include "ceopt/benchmarks/registry.hpp"

#include <vector>

namespace ceopt {

struct SingleRunResult {
    Population population;
    std::vector<Individual> peaks;
    ClusterAssignment clusters;
    std::uint64_t evaluations = 0;
};

namespace detail {

    inline void require_single(Problem const& problem)
    {
        if (!problem.is_single()) {
            throw ConfigError(problem.id + " is not a single-objective problem");
        }
    }

    inline double registry_radius(Problem const& problem)
    {
        auto const& table = optima_table();
        auto it = table.find(problem.id);
        return it == table.end() ? 0.01 : it->second.niche_radius;
    }

    inline double resolve_cluster_radius(Problem const& problem, AlgoConfig const& cfg)
    {
        return cfg.cluster_radius.value_or(registry_radius(problem));
    }

    inline DCConfig resolve_dc(Problem const& problem, AlgoConfig const& cfg)
    {
        return cfg.dc.value_or(DCConfig::with_radius(registry_radius(problem)));
    }

    inline Population random_population(Problem const& problem, std::size_t n, RngStream& rng,
        EvaluationCounter& counter)
    {
        Population pop;
        pop.members.resize(n);
        for (auto& ind : pop.members) {
            ind.genome = random_genome(problem.bounds, rng);
            evaluate_individual(problem, ind, counter);
        }
        return pop;
    }

    inline void check_budget(AlgoConfig const& cfg)
    {
        if (cfg.budget() < cfg.population_size) {
            throw ConfigError("evaluation budget is smaller than the population size");
        }
    }

    inline SingleRunResult finish(Population pop, Problem const& problem, AlgoConfig const& cfg,
        EvaluationCounter const& counter)
    {
        SingleRunResult out;
        out.clusters = persistence_cluster(pop, resolve_cluster_radius(problem, cfg));
        out.peaks = cluster_vertices(out.clusters, pop);
        out.population = std::move(pop);
        out.evaluations = counter.count();
        return out;
    }

    // Chaotic evolution loop shared by CEDC and CE; `select` decides the survivor
    // of each (parent, mutant) pair.
    template <typename Select>
    SingleRunResult chaotic_evolution(Problem const& problem, AlgoConfig const& cfg, GenerationObserver const& observe,
        Select&& select)
    {
        require_single(problem);
        cfg.validate();
        check_budget(cfg);
        RngStream const root(cfg.seed);
        auto init_rng = root.substream("init");
        auto chaos_rng = root.substream("chaotic");
        EvaluationCounter counter(cfg.budget());
        std::size_t const n = cfg.population_size;

        Population pop = random_population(problem, n, init_rng, counter);
        std::vector<ChaoticState> states;
        states.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            states.push_back(init_chaotic_state(problem.dimension, chaos_rng));
        }
        if (observe) {
            observe(pop, counter.count());
        }
        std::vector<Individual> mutants(n);
        while (counter.can_afford(n)) {
            for (std::size_t i = 0; i < n; ++i) {
                mutants[i].genome = chaotic_mutant(pop[i].genome, states[i], problem.bounds, cfg.chaotic, chaos_rng);
                evaluate_individual(problem, mutants[i], counter);
            }
            pop = select(pop, mutants);
            if (observe) {
                observe(pop, counter.count());
            }
        }
        return finish(std::move(pop), problem, cfg, counter);
    }

} // namespace detail

// Chaotic evolution with radius-improved deterministic crowding. Each member
// produces one chaotic mutant and competes with it; peaks are the cluster
// vertices of the final population.
inline SingleRunResult run_cedc(Problem const& problem, AlgoConfig const& cfg, GenerationObserver const& observe = {})
{
    DCConfig const dc = detail::resolve_dc(problem, cfg);
    return detail::chaotic_evolution(problem, cfg, observe,
        [&](Population const& parents, std::vector<Individual> const& mutants) {
            return dc_generation(parents, mutants, dc, cfg.pairing);
        });
}

// Plain chaotic evolution: a mutant replaces its parent only if strictly fitter.
inline SingleRunResult ce_baseline(Problem const& problem, AlgoConfig const& cfg, GenerationObserver const& observe = {})
{
    return detail::chaotic_evolution(problem, cfg, observe,
        [](Population const& parents, std::vector<Individual> const& mutants) {
            Population next;
            next.generation = parents.generation + 1;
            next.members.reserve(parents.size());
            for (std::size_t i = 0; i < parents.size(); ++i) {
                next.members.push_back(dc_select_original(parents[i], mutants[i]));
            }
            return next;
        });
}

// Chaotic evolution with persistence-based clustering. Every generation each
// member proposes a chaotic mutant (kept if fitter), the population is
// clustered, and every vertex is refined by guarded Gaussian trials whose
// step size adapts per slot and resets when a chaotic mutant takes the slot.
inline SingleRunResult run_ceca(Problem const& problem, AlgoConfig const& cfg, GenerationObserver const& observe = {})
{
    detail::require_single(problem);
    cfg.validate();
    detail::check_budget(cfg);
    double const radius = detail::resolve_cluster_radius(problem, cfg);
    RngStream const root(cfg.seed);
    auto init_rng = root.substream("init");
    auto chaos_rng = root.substream("chaotic");
    auto gauss_rng = root.substream("gaussian");
    EvaluationCounter counter(cfg.budget());
    std::size_t const n = cfg.population_size;

    Population pop = detail::random_population(problem, n, init_rng, counter);
    std::vector<ChaoticState> states;
    states.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        states.push_back(init_chaotic_state(problem.dimension, chaos_rng));
    }
    if (observe) {
        observe(pop, counter.count());
    }
    AdaptiveStep const fresh { cfg.gaussian.sigma, cfg.refine_sigma_min, cfg.refine_sigma_max, cfg.refine_expand };
    std::vector<AdaptiveStep> steps(n, fresh);
    Individual mutant;
    while (counter.can_afford(n)) {
        for (std::size_t i = 0; i < n; ++i) {
            mutant.genome = chaotic_mutant(pop[i].genome, states[i], problem.bounds, cfg.chaotic, chaos_rng);
            evaluate_individual(problem, mutant, counter);
            if (mutant.fit() > pop[i].fit()) {
                pop[i] = mutant;
                steps[i] = fresh;
            }
        }
        auto const clusters = persistence_cluster(pop, radius);
        for (auto v : clusters.vertices) {
            refine_adaptive(pop[v], problem, steps[v], cfg.refine_trials, gauss_rng, counter);
        }
        ++pop.generation;
        if (observe) {
            observe(pop, counter.count());
        }
    }
    return detail::finish(std::move(pop), problem, cfg, counter);
}

// Generational GA: binary tournaments, uniform crossover (cxpb per pair),
// per-gene uniform reset (mutpb), and the best parent carried over.
inline SingleRunResult ga_baseline(Problem const& problem, AlgoConfig const& cfg, GenerationObserver const& observe = {})
{
    detail::require_single(problem);
    cfg.validate();
    detail::check_budget(cfg);
    RngStream const root(cfg.seed);
    auto init_rng = root.substream("init");
    auto rng = root.substream("variation");
    EvaluationCounter counter(cfg.budget());
    std::size_t const n = cfg.population_size;
    std::size_t const dim = problem.dimension;

    Population pop = detail::random_population(problem, n, init_rng, counter);
    if (observe) {
        observe(pop, counter.count());
    }
    auto tournament = [&](Population const& p) -> Individual const& {
        auto const& a = p[rng.index(n)];
        auto const& b = p[rng.index(n)];
        return b.fit() > a.fit() ? b : a;
    };
    while (counter.can_afford(n - 1)) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
            if (pop[i].fit() > pop[best].fit()) {
                best = i;
            }
        }
        Population next;
        next.generation = pop.generation + 1;
        next.members.reserve(n);
        next.members.push_back(pop[best]);
        while (next.size() < n) {
            Individual a = tournament(pop);
            Individual b = tournament(pop);
            if (rng.bernoulli(cfg.cxpb)) {
                for (std::size_t d = 0; d < dim; ++d) {
                    if (rng.bernoulli(0.5)) {
                        std::swap(a.genome[d], b.genome[d]);
                    }
                }
            }
            for (auto* child : { &a, &b }) {
                for (std::size_t d = 0; d < dim; ++d) {
                    if (rng.bernoulli(cfg.mutpb)) {
                        child->genome[d] = rng.uniform(problem.bounds.lower(d), problem.bounds.upper(d));
                    }
                }
            }
            for (auto* child : { &a, &b }) {
                if (next.size() < n) {
                    evaluate_individual(problem, *child, counter);
                    next.members.push_back(std::move(*child));
                }
            }
        }
        pop = std::move(next);
        if (observe) {
            observe(pop, counter.count());
        }
    }
    return detail::finish(std::move(pop), problem, cfg, counter);
}

} // namespace ceopt

#endif
