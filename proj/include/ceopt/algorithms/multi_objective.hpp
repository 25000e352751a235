#ifndef CEOPT_ALGORITHMS_MULTI_OBJECTIVE_HPP
#define CEOPT_ALGORITHMS_MULTI_OBJECTIVE_HPP

// NSGA-II baseline and CEC-NSGAII. Both run on one engine; the CEC extensions
// draw from their own random substreams, so with every feature off the engine
// consumes exactly the baseline's random numbers.

#include "ceopt/algorithms/config.hpp"
#include "ceopt/benchmarks/problem.hpp"
#include "ceopt/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace ceopt {

// Mean distance from each candidate to its k nearest archive genomes.
inline std::vector<double> uncertainty_scores(std::span<Genome const> candidates, std::span<Genome const> archive,
    std::size_t k)
{
    if (archive.empty()) {
        throw DomainError("uncertainty_scores: archive is empty");
    }
    if (k == 0) {
        throw ConfigError("uncertainty_scores: k must be at least 1");
    }
    k = std::min(k, archive.size());
    std::vector<double> out;
    out.reserve(candidates.size());
    std::vector<double> d(archive.size());
    for (auto const& c : candidates) {
        for (std::size_t j = 0; j < archive.size(); ++j) {
            d[j] = euclidean_distance(c, archive[j]);
        }
        std::nth_element(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k - 1), d.end());
        std::sort(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(k));
        double s = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            s += d[j];
        }
        out.push_back(s / static_cast<double>(k));
    }
    return out;
}

inline std::vector<double> uncertainty_scores(std::span<Individual const> candidates,
    std::span<Individual const> archive, std::size_t k)
{
    std::vector<Genome> c;
    std::vector<Genome> a;
    c.reserve(candidates.size());
    a.reserve(archive.size());
    for (auto const& i : candidates) {
        c.push_back(i.genome);
    }
    for (auto const& i : archive) {
        a.push_back(i.genome);
    }
    return uncertainty_scores(std::span<Genome const>(c), std::span<Genome const>(a), k);
}

// crowding / max finite crowding, with boundary points (infinite) mapped to 2,
// plus w * uncertainty / max uncertainty.
inline std::vector<double> blended_scores(std::span<double const> crowding, std::span<double const> uncertainty,
    double weight)
{
    double max_cd = 0.0;
    for (double v : crowding) {
        if (std::isfinite(v)) {
            max_cd = std::max(max_cd, v);
        }
    }
    double max_u = 0.0;
    for (double v : uncertainty) {
        max_u = std::max(max_u, v);
    }
    std::vector<double> out(crowding.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        double cd = std::isfinite(crowding[i]) ? (max_cd > 0.0 ? crowding[i] / max_cd : 0.0) : 2.0;
        double u = uncertainty.empty() || max_u <= 0.0 ? 0.0 : uncertainty[i] / max_u;
        out[i] = cd + weight * u;
    }
    return out;
}

struct MultiRunResult {
    Population population;
    std::vector<Individual> archive; // every non-dominated point evaluated during the run
    std::uint64_t evaluations = 0;
};

using MoGenerationObserver = std::function<void(Population const&, ParetoArchive const&, std::uint64_t evaluations)>;

inline std::vector<std::vector<double>> objective_vectors(std::span<Individual const> members)
{
    std::vector<std::vector<double>> out;
    out.reserve(members.size());
    for (auto const& m : members) {
        out.push_back(m.objs());
    }
    return out;
}

// Objective vectors of the population's first front.
inline std::vector<std::vector<double>> first_front(Population const& pop)
{
    auto const objs = objective_vectors(pop.members);
    auto const fronts = fast_nondominated_sort(objs);
    std::vector<std::vector<double>> out;
    if (!fronts.empty()) {
        for (auto i : fronts[0]) {
            out.push_back(objs[i]);
        }
    }
    return out;
}

inline double mo_cluster_radius(Problem const& problem, AlgoConfig const& cfg)
{
    if (cfg.cluster_radius) {
        return *cfg.cluster_radius;
    }
    double s = 0.0;
    for (std::size_t d = 0; d < problem.dimension; ++d) {
        s += problem.bounds.width(d) * problem.bounds.width(d);
    }
    return cfg.mo_cluster_fraction * std::sqrt(s);
}

namespace detail {

    struct Ranking {
        std::vector<std::size_t> rank;
        std::vector<double> key; // larger is better within a rank
    };

    inline std::vector<std::size_t> order_by(Ranking const& r)
    {
        std::vector<std::size_t> order(r.rank.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (r.rank[a] != r.rank[b]) {
                return r.rank[a] < r.rank[b];
            }
            return r.key[a] > r.key[b];
        });
        return order;
    }

    inline bool better(Ranking const& r, std::size_t a, std::size_t b)
    {
        return r.rank[a] < r.rank[b] || (r.rank[a] == r.rank[b] && r.key[a] > r.key[b]);
    }

    class NsgaEngine {
    public:
        NsgaEngine(Problem const& problem, AlgoConfig const& cfg, CecFeatures features)
            : problem_(problem)
            , cfg_(cfg)
            , f_(features)
            , root_(cfg.seed)
            , init_rng_(root_.substream("init"))
            , var_rng_(root_.substream("variation"))
            , chaos_rng_(root_.substream("chaotic"))
            , gauss_rng_(root_.substream("gaussian"))
            , counter_(std::numeric_limits<std::uint64_t>::max())
        {
            if (problem.is_single()) {
                throw ConfigError(problem.id + " is not a multi-objective problem");
            }
            cfg.validate();
            if (cfg.mu < 2 || cfg.lambda < 2) {
                throw ConfigError("mu and lambda must be at least 2");
            }
            radius_ = mo_cluster_radius(problem, cfg);
        }

        MultiRunResult run(MoGenerationObserver const& observe)
        {
            std::size_t const mu = cfg_.mu;
            Population pop;
            pop.members.resize(mu);
            for (auto& ind : pop.members) {
                ind.genome = random_genome(problem_.bounds, init_rng_);
                evaluate(ind);
            }
            if (f_.chaotic) {
                matrix_ = init_chaotic_matrix(mu, chaos_rng_);
                for (std::size_t i = 0; i < cfg_.lambda; ++i) {
                    states_.push_back(init_chaotic_state(problem_.dimension, chaos_rng_));
                }
            }
            if (observe) {
                observe(pop, archive_, counter_.count());
            }
            for (std::size_t g = 0; g < cfg_.generations; ++g) {
                pop = generation(pop, g);
                if (observe) {
                    observe(pop, archive_, counter_.count());
                }
            }
            MultiRunResult out;
            out.population = std::move(pop);
            out.archive = archive_.members();
            out.evaluations = counter_.count();
            return out;
        }

    private:
        void evaluate(Individual& ind)
        {
            evaluate_individual(problem_, ind, counter_);
            archive_.insert(ind);
            if (f_.uncertainty) {
                history_.push_back(ind.genome);
            }
        }

        Ranking rank(std::span<Individual const> members) const
        {
            auto const objs = objective_vectors(members);
            Ranking r;
            Fronts fronts = fast_nondominated_sort(objs);
            if (!f_.sorting) {
                Fronts one(1);
                for (std::size_t i = 0; i < members.size(); ++i) {
                    one[0].push_back(i);
                }
                fronts = std::move(one);
            }
            r.rank = front_ranks(fronts, members.size());
            auto const cd = crowding_by_front(objs, fronts);
            if (!f_.uncertainty) {
                r.key = cd;
                return r;
            }
            std::vector<Genome> genomes;
            genomes.reserve(members.size());
            for (auto const& m : members) {
                genomes.push_back(m.genome);
            }
            auto const u = uncertainty_scores(genomes, history_, cfg_.uncertainty_k);
            r.key = blended_scores(cd, u, cfg_.uncertainty_weight);
            return r;
        }

        std::size_t tournament(Ranking const& r)
        {
            std::size_t const a = var_rng_.index(r.rank.size());
            std::size_t const b = var_rng_.index(r.rank.size());
            return better(r, b, a) ? b : a;
        }

        std::vector<Individual> variation(Population const& pop, Ranking const& r)
        {
            std::size_t const mu = pop.size();
            std::size_t const dim = problem_.dimension;
            std::vector<std::size_t> comp;
            if (f_.chaotic) {
                matrix_ = chaotic_matrix_step(matrix_);
                comp = competitor_indices(matrix_);
            }
            std::vector<Individual> offspring;
            offspring.reserve(cfg_.lambda);
            std::size_t slot = 0;
            while (offspring.size() < cfg_.lambda) {
                std::size_t pa = 0;
                std::size_t pb = 0;
                if (f_.chaotic) {
                    std::size_t const i = slot % mu;
                    std::size_t const j = (slot + 1) % mu;
                    pa = better(r, comp[i], i) ? comp[i] : i;
                    pb = better(r, comp[j], j) ? comp[j] : j;
                } else {
                    pa = tournament(r);
                    pb = tournament(r);
                }
                Individual a;
                Individual b;
                a.genome = pop[pa].genome;
                b.genome = pop[pb].genome;
                if (var_rng_.bernoulli(cfg_.cxpb)) {
                    for (std::size_t d = 0; d < dim; ++d) {
                        double const alpha = var_rng_.uniform();
                        double const x = a.genome[d];
                        double const y = b.genome[d];
                        a.genome[d] = alpha * x + (1.0 - alpha) * y;
                        b.genome[d] = (1.0 - alpha) * x + alpha * y;
                    }
                }
                for (auto* child : { &a, &b }) {
                    if (offspring.size() >= cfg_.lambda) {
                        break;
                    }
                    if (var_rng_.bernoulli(cfg_.mutpb)) {
                        if (f_.chaotic) {
                            child->genome = chaotic_mutant(child->genome, states_[offspring.size()], problem_.bounds,
                                cfg_.chaotic, chaos_rng_);
                        } else {
                            child->genome = gaussian_mutate(child->genome, cfg_.gaussian.sigma, problem_.bounds, var_rng_);
                        }
                    }
                    offspring.push_back(std::move(*child));
                }
                slot += 2;
            }
            for (auto& child : offspring) {
                evaluate(child);
            }
            return offspring;
        }

        // Clusters the pool in decision space and runs deterministic crowding
        // between nearest pairs inside each cluster. Returns survivor flags.
        std::vector<bool> cluster_dc(std::vector<Individual> const& pool, Ranking const& r) const
        {
            std::size_t const n = pool.size();
            double max_key = 0.0;
            for (double k : r.key) {
                max_key = std::max(max_key, k);
            }
            std::vector<double> scalar(n);
            for (std::size_t i = 0; i < n; ++i) {
                scalar[i] = -static_cast<double>(r.rank[i]) + 0.5 * (max_key > 0.0 ? r.key[i] / max_key : 0.0);
            }
            std::vector<Genome> genomes;
            genomes.reserve(n);
            for (auto const& m : pool) {
                genomes.push_back(m.genome);
            }
            DistanceMatrix const dist(genomes);
            auto const clusters = persistence_cluster(dist, scalar, radius_);
            DCConfig const dc = cfg_.dc.value_or(DCConfig { radius_, 0.0 });

            std::vector<bool> alive(n, true);
            std::vector<bool> paired(n, false);
            for (std::size_t i = 0; i < n; ++i) {
                if (paired[i]) {
                    continue;
                }
                paired[i] = true;
                std::size_t best = n;
                double best_d = std::numeric_limits<double>::infinity();
                for (std::size_t j = i + 1; j < n; ++j) {
                    if (!paired[j] && clusters.labels[j] == clusters.labels[i] && dist(i, j) < best_d) {
                        best_d = dist(i, j);
                        best = j;
                    }
                }
                if (best == n) {
                    continue; // odd member passes through
                }
                paired[best] = true;
                bool const second_wins = dc_offspring_wins(best_d, scalar[i], scalar[best], dc);
                alive[second_wins ? i : best] = false;
            }
            return alive;
        }

        Population select(Population const& pop, std::vector<Individual> offspring)
        {
            std::size_t const mu = cfg_.mu;
            std::vector<Individual> pool = pop.members;
            for (auto& o : offspring) {
                pool.push_back(std::move(o));
            }
            Ranking const r = rank(pool);
            std::vector<std::size_t> order = order_by(r);
            if (f_.clustering) {
                auto alive = cluster_dc(pool, r);
                for (std::size_t i = 0; i < pool.size(); ++i) {
                    if (r.rank[i] == 0 && f_.sorting) {
                        alive[i] = true;
                    }
                }
                // survivors first, then the DC losers as filler, each in rank order
                std::stable_partition(order.begin(), order.end(), [&](std::size_t i) { return alive[i]; });
            }
            Population next;
            next.generation = pop.generation + 1;
            next.members.reserve(mu);
            for (std::size_t i = 0; i < mu; ++i) {
                next.members.push_back(std::move(pool[order[i]]));
            }
            return next;
        }

        Population generation(Population const& pop, std::size_t g)
        {
            Ranking const r = rank(pop.members);
            auto offspring = variation(pop, r);
            Population next = select(pop, std::move(offspring));
            if (f_.elite_gaussian) {
                double sigma = cfg_.gaussian.sigma;
                if (f_.adaptive_sigma) {
                    double const t = cfg_.generations > 1
                        ? static_cast<double>(g) / static_cast<double>(cfg_.generations - 1)
                        : 1.0;
                    sigma = cfg_.sigma_start + (cfg_.sigma_end - cfg_.sigma_start) * t;
                }
                for (auto i : elite_indices(next, cfg_.gaussian.elite_fraction)) {
                    Individual trial;
                    trial.genome = gaussian_mutate(next[i].genome, sigma, problem_.bounds, gauss_rng_);
                    evaluate(trial);
                    if (improves(trial, next[i])) {
                        next[i] = std::move(trial);
                    }
                }
            }
            return next;
        }

        Problem const& problem_;
        AlgoConfig const& cfg_;
        CecFeatures f_;
        RngStream root_;
        RngStream init_rng_;
        RngStream var_rng_;
        RngStream chaos_rng_;
        RngStream gauss_rng_;
        EvaluationCounter counter_;
        ParetoArchive archive_;
        std::vector<Genome> history_;
        ChaoticMatrix matrix_;
        std::vector<ChaoticState> states_;
        double radius_ = 0.0;
    };

} // namespace detail

// (mu + lambda) NSGA-II with blend crossover and Gaussian mutation.
inline MultiRunResult run_nsgaii_baseline(Problem const& problem, AlgoConfig const& cfg,
    MoGenerationObserver const& observe = {})
{
    return detail::NsgaEngine(problem, cfg, CecFeatures::none()).run(observe);
}

// NSGA-II with the CEC extensions selected by cfg.features.
inline MultiRunResult run_cec_nsgaii(Problem const& problem, AlgoConfig const& cfg,
    MoGenerationObserver const& observe = {})
{
    return detail::NsgaEngine(problem, cfg, cfg.features).run(observe);
}

} // namespace ceopt

#endif
