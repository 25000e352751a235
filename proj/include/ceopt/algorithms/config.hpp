#ifndef CEOPT_ALGORITHMS_CONFIG_HPP
#define CEOPT_ALGORITHMS_CONFIG_HPP

#include "ceopt/chaotic.hpp"
#include "ceopt/clustering.hpp"
#include "ceopt/core.hpp"
#include "ceopt/localsearch.hpp"
#include "ceopt/niching.hpp"

#include <cstdint>
#include <functional>
#include <optional>

namespace ceopt {

// Switches for the CEC-NSGAII extensions. All off reproduces the NSGA-II baseline.
struct CecFeatures {
    bool chaotic = true;        // chaotic-matrix mating and chaotic mutation
    bool clustering = true;     // decision-space clusters + DC in environmental selection
    bool uncertainty = true;    // k-NN density surrogate blended into the selection key
    bool elite_gaussian = true; // guarded Gaussian trial on the top elites each generation
    bool adaptive_sigma = true; // elite sigma decays linearly over the run
    bool sorting = true;        // keep non-dominated sorting (false: pure cluster-DC ablation)

    static CecFeatures none()
    {
        return { false, false, false, false, false, true };
    }
};

struct AlgoConfig {
    std::size_t population_size = 200;
    // Single-objective budget in evaluations; defaults to 2000 * N.
    std::optional<std::uint64_t> evaluation_budget;
    // Multi-objective runs are limited by generations.
    std::size_t generations = 10;
    std::size_t mu = 200;
    std::size_t lambda = 200;
    double cxpb = 0.7;
    double mutpb = 0.2;

    // Radius-improved DC; unset means the registry niche radius for both thresholds.
    std::optional<DCConfig> dc;
    DCPairing pairing = DCPairing::index;
    GaussianConfig gaussian;
    // Clustering radius; unset means the registry niche radius (single-objective)
    // or mo_cluster_fraction of the decision-space diagonal (multi-objective).
    std::optional<double> cluster_radius;
    double mo_cluster_fraction = 0.1;
    ChaoticParams chaotic;

    // CECA vertex refinement: guarded Gaussian trials per vertex per generation,
    // starting at gaussian.sigma and adapted by the 1/5th success rule.
    std::size_t refine_trials = 5;
    double refine_sigma_min = 1e-12;
    double refine_sigma_max = 0.1;
    double refine_expand = 1.5;

    // CEC-NSGAII
    double uncertainty_weight = 0.5;
    std::size_t uncertainty_k = 5;
    double sigma_start = 0.05;
    double sigma_end = 0.01;
    CecFeatures features;

    std::uint64_t seed = 1;

    [[nodiscard]] std::uint64_t budget() const { return evaluation_budget.value_or(2000ULL * population_size); }

    void validate() const
    {
        if (population_size < 2) {
            throw ConfigError("population_size must be at least 2");
        }
        if (!(cxpb >= 0.0 && cxpb <= 1.0 && mutpb >= 0.0 && mutpb <= 1.0)) {
            throw ConfigError("cxpb and mutpb must lie in [0, 1]");
        }
        if (dc) {
            dc->validate();
        }
        gaussian.validate();
        if (cluster_radius && !(*cluster_radius > 0.0)) {
            throw ConfigError("cluster_radius must be positive");
        }
        if (!(chaotic.width > 0.0)) {
            throw ConfigError("chaotic width must be positive");
        }
        if (uncertainty_k == 0) {
            throw ConfigError("uncertainty_k must be at least 1");
        }
        if (!(refine_sigma_min > 0.0 && refine_sigma_min <= refine_sigma_max && refine_expand > 1.0)) {
            throw ConfigError("refinement step bounds must satisfy 0 < min <= max and expand > 1");
        }
    }
};

// Called after initialization (generation 0) and after every generation.
using GenerationObserver = std::function<void(Population const&, std::uint64_t evaluations)>;

} // namespace ceopt

#endif
