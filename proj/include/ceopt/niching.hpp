#ifndef CEOPT_NICHING_HPP
#define CEOPT_NICHING_HPP

#include "ceopt/core.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace ceopt {

struct PairingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// r_dist is a decision-space distance, r_fit a fitness gain.
struct DCConfig {
    double r_dist = 0.01;
    double r_fit = 0.01;

    static DCConfig with_radius(double r) { return DCConfig { r, r }; }

    void validate() const
    {
        if (!(std::isfinite(r_dist) && std::isfinite(r_fit) && r_dist >= 0.0 && r_fit >= 0.0)) {
            throw ConfigError("DCConfig: thresholds must be finite and non-negative");
        }
    }
};

enum class DCPairing { index, nearest };

// Radius-aware deterministic crowding: beyond r_dist the fitter wins; within
// r_dist the offspring must improve on the parent by more than r_fit.
// Ties always keep the parent.
inline bool dc_offspring_wins(double distance, double parent_fitness, double offspring_fitness, DCConfig const& cfg)
{
    if (distance > cfg.r_dist) {
        return offspring_fitness > parent_fitness;
    }
    return offspring_fitness - parent_fitness > cfg.r_fit;
}

inline Individual const& dc_select(Individual const& parent, Individual const& offspring, DCConfig const& cfg)
{
    double const d = euclidean_distance(parent.genome, offspring.genome);
    return dc_offspring_wins(d, parent.fit(), offspring.fit(), cfg) ? offspring : parent;
}

inline Individual const& dc_select_original(Individual const& parent, Individual const& offspring)
{
    return offspring.fit() > parent.fit() ? offspring : parent;
}

// Member i of the result is the survivor of the i-th parent/offspring
// competition. With index pairing offspring[i] competes with parents[i]; with
// nearest pairing each offspring (in index order) meets the nearest parent not
// yet matched, and unmatched parents survive.
inline Population dc_generation(Population const& parents, std::vector<Individual> const& offspring,
    DCConfig const& cfg, DCPairing pairing = DCPairing::index)
{
    if (parents.size() != offspring.size()) {
        throw PairingError("dc_generation: parents and offspring differ in size");
    }
    Population next;
    next.generation = parents.generation + 1;
    if (pairing == DCPairing::index) {
        next.members.reserve(parents.size());
        for (std::size_t i = 0; i < parents.size(); ++i) {
            next.members.push_back(dc_select(parents[i], offspring[i], cfg));
        }
        return next;
    }
    next.members = parents.members;
    std::vector<bool> taken(parents.size(), false);
    for (auto const& child : offspring) {
        std::size_t best = parents.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < parents.size(); ++j) {
            if (taken[j]) {
                continue;
            }
            double const d = squared_distance(parents[j].genome, child.genome);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        taken[best] = true;
        next.members[best] = dc_select(parents[best], child, cfg);
    }
    return next;
}

} // namespace ceopt

#endif
