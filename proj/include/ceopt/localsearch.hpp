#ifndef CEOPT_LOCALSEARCH_HPP
#define CEOPT_LOCALSEARCH_HPP

#include "ceopt/benchmarks/problem.hpp"
#include "ceopt/core.hpp"
#include "ceopt/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <vector>

namespace ceopt {

// sigma is a fraction of the per-dimension search width.
struct GaussianConfig {
    double sigma = 0.01;
    double elite_fraction = 0.10;

    void validate() const
    {
        if (!(std::isfinite(sigma) && sigma > 0.0)) {
            throw ConfigError("GaussianConfig: sigma must be finite and positive");
        }
        if (!(elite_fraction > 0.0 && elite_fraction <= 1.0)) {
            throw ConfigError("GaussianConfig: elite_fraction must lie in (0, 1]");
        }
    }
};

inline Genome gaussian_mutate(std::span<double const> x, double sigma, Bounds const& bounds, RngStream& rng)
{
    if (x.size() != bounds.dimension()) {
        throw DimensionError("gaussian_mutate: genome/bounds mismatch");
    }
    Genome out(x.begin(), x.end());
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d] += rng.normal() * sigma * bounds.width(d);
    }
    return clamp(out, bounds);
}

inline Genome gaussian_mutate(std::span<double const> x, GaussianConfig const& cfg, Bounds const& bounds, RngStream& rng)
{
    return gaussian_mutate(x, cfg.sigma, bounds, rng);
}

inline std::size_t elite_count(std::size_t n, double fraction)
{
    if (n == 0) {
        return 0;
    }
    // ceil with a guard against 0.1 * 10 landing a hair above 1
    auto const k = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n) - 1e-9));
    return std::clamp<std::size_t>(k, 1, n);
}

// Indices of the elites, best first. Single-objective: fitness (ties to the
// lower index). Multi-objective: front rank, then crowding distance.
inline std::vector<std::size_t> elite_indices(Population const& population, double fraction)
{
    std::size_t const n = population.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (n == 0) {
        return order;
    }
    if (population[0].fitness) {
        std::stable_sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return population[a].fit() > population[b].fit(); });
    } else {
        std::vector<std::vector<double>> objs;
        objs.reserve(n);
        for (auto const& ind : population) {
            objs.push_back(ind.objs());
        }
        auto const fronts = fast_nondominated_sort(objs);
        auto const rank = front_ranks(fronts, n);
        auto const crowd = crowding_by_front(objs, fronts);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (rank[a] != rank[b]) {
                return rank[a] < rank[b];
            }
            return crowd[a] > crowd[b];
        });
    }
    order.resize(elite_count(n, fraction));
    return order;
}

inline bool improves(Individual const& trial, Individual const& incumbent)
{
    if (incumbent.fitness) {
        return trial.fit() > incumbent.fit();
    }
    return dominates(trial.objs(), incumbent.objs());
}

// One guarded Gaussian trial per elite; a trial replaces its elite only if it
// is fitter (or dominates it). Elites beyond the remaining budget are skipped.
inline Population elite_gaussian(Population const& population, double sigma, double elite_fraction,
    Problem const& problem, RngStream& rng, EvaluationCounter& counter)
{
    Population out = population;
    for (auto i : elite_indices(population, elite_fraction)) {
        if (!counter.can_afford(1)) {
            break;
        }
        Individual trial;
        trial.genome = gaussian_mutate(population[i].genome, sigma, problem.bounds, rng);
        evaluate_individual(problem, trial, counter);
        if (improves(trial, population[i])) {
            out[i] = std::move(trial);
        }
    }
    return out;
}

inline Population elite_gaussian(Population const& population, GaussianConfig const& cfg, Problem const& problem,
    RngStream& rng, EvaluationCounter& counter)
{
    return elite_gaussian(population, cfg.sigma, cfg.elite_fraction, problem, rng, counter);
}

// Guarded hill-climbing on one individual: `trials` Gaussian trials, trial t
// drawn with sigma * ladder^t, each kept only if fitter. Returns the number of
// accepted trials.
inline std::size_t refine_guarded(Individual& ind, Problem const& problem, double sigma, std::size_t trials,
    double ladder, RngStream& rng, EvaluationCounter& counter)
{
    std::size_t accepted = 0;
    double s = sigma;
    for (std::size_t t = 0; t < trials && counter.can_afford(1); ++t) {
        Individual trial;
        trial.genome = gaussian_mutate(ind.genome, s, problem.bounds, rng);
        evaluate_individual(problem, trial, counter);
        if (improves(trial, ind)) {
            ind = std::move(trial);
            ++accepted;
        }
        s *= ladder;
    }
    return accepted;
}

// Guarded hill-climbing with a success-based step size (the 1/5th rule):
// sigma grows by `expand` after an accepted trial and shrinks by
// expand^(-1/4) after a rejected one, clipped to [sigma_min, sigma_max].
// Returns the number of accepted trials.
struct AdaptiveStep {
    double sigma = 0.01;
    double sigma_min = 1e-12;
    double sigma_max = 0.1;
    double expand = 1.5;
};

inline std::size_t refine_adaptive(Individual& ind, Problem const& problem, AdaptiveStep& step, std::size_t trials,
    RngStream& rng, EvaluationCounter& counter)
{
    std::size_t accepted = 0;
    double const shrink = std::pow(step.expand, -0.25);
    for (std::size_t t = 0; t < trials && counter.can_afford(1); ++t) {
        Individual trial;
        trial.genome = gaussian_mutate(ind.genome, step.sigma, problem.bounds, rng);
        evaluate_individual(problem, trial, counter);
        if (improves(trial, ind)) {
            ind = std::move(trial);
            ++accepted;
            step.sigma = std::min(step.sigma * step.expand, step.sigma_max);
        } else {
            step.sigma = std::max(step.sigma * shrink, step.sigma_min);
        }
    }
    return accepted;
}

} // namespace ceopt

#endif
