#ifndef CEOPT_METRICS_HPP
#define CEOPT_METRICS_HPP

#include "ceopt/benchmarks/registry.hpp"
#include "ceopt/core.hpp"
#include "ceopt/pareto.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace ceopt {

struct ReferenceError : std::domain_error {
    using std::domain_error::domain_error;
};
struct CountingError : std::logic_error {
    using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Peak ratio

struct PeakCountParams {
    double accuracy_eps = default_accuracy;
    double niche_radius = 0.01;

    static PeakCountParams from_registry(OptimaRegistry const& reg, double eps = default_accuracy)
    {
        return { eps, reg.niche_radius };
    }

    void validate() const
    {
        if (!(accuracy_eps > 0.0 && niche_radius > 0.0)) {
            throw ConfigError("PeakCountParams: accuracy and radius must be positive");
        }
    }
};

// Number of known global optima found by `candidates`. With stored locations
// an optimum counts when some candidate is within the niche radius of it and
// within eps of the optimum value. Without locations, candidates within eps
// are taken in decreasing fitness order and kept when farther than the niche
// radius from every kept one; the count is capped at the number of optima.
inline std::size_t count_found_peaks(std::span<Individual const> candidates, OptimaRegistry const& registry,
    PeakCountParams const& params)
{
    params.validate();
    auto within_eps = [&](Individual const& c) { return std::abs(c.fit() - registry.optimum_value) <= params.accuracy_eps; };
    if (registry.has_locations()) {
        std::size_t found = 0;
        for (auto const& opt : registry.global_optima) {
            for (auto const& c : candidates) {
                if (c.genome.size() != opt.size()) {
                    throw LookupError("count_found_peaks: candidate dimension does not match registry "
                        + registry.problem_id);
                }
                if (euclidean_distance(c.genome, opt) <= params.niche_radius && within_eps(c)) {
                    ++found;
                    break;
                }
            }
        }
        return found;
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (within_eps(candidates[i])) {
            order.push_back(i);
        }
    }
    std::stable_sort(order.begin(), order.end(),
        [&](std::size_t a, std::size_t b) { return candidates[a].fit() > candidates[b].fit(); });
    std::vector<std::size_t> seeds;
    for (auto i : order) {
        bool const fresh = std::none_of(seeds.begin(), seeds.end(), [&](std::size_t s) {
            return euclidean_distance(candidates[i].genome, candidates[s].genome) <= params.niche_radius;
        });
        if (fresh) {
            seeds.push_back(i);
        }
    }
    return std::min(seeds.size(), registry.count_global);
}

inline double peak_ratio(std::span<std::size_t const> npf_per_run, std::size_t nkp, std::size_t nr)
{
    if (nkp == 0 || nr == 0) {
        throw ConfigError("peak_ratio: NKP and NR must be positive");
    }
    if (npf_per_run.size() != nr) {
        throw ConfigError("peak_ratio: expected one NPF per run");
    }
    std::size_t total = 0;
    for (auto v : npf_per_run) {
        if (v > nkp) {
            throw CountingError("peak_ratio: a run found more peaks than are known");
        }
        total += v;
    }
    return static_cast<double>(total) / (static_cast<double>(nkp) * static_cast<double>(nr));
}

// ---------------------------------------------------------------------------
// Hypervolume (minimization)

struct HvReferencePoint {
    std::vector<double> coordinates;
};

struct HvResult {
    double value = 0.0;
    std::size_t discarded = 0; // points not strictly better than the reference
};

namespace detail {

    // Area dominated by 2-D points, all strictly better than ref.
    inline double hv2d(std::vector<std::array<double, 2>> pts, double r0, double r1)
    {
        std::sort(pts.begin(), pts.end(), [](auto const& a, auto const& b) {
            return a[0] < b[0] || (a[0] == b[0] && a[1] < b[1]);
        });
        double area = 0.0;
        double ceiling = r1;
        for (auto const& p : pts) {
            if (p[1] < ceiling) {
                area += (r0 - p[0]) * (ceiling - p[1]);
                ceiling = p[1];
            }
        }
        return area;
    }

    // Slices along the third objective; each slab is the 2-D area of the
    // points already swept times the slab height.
    inline double hv3d(std::vector<std::vector<double>> const& pts, std::span<double const> ref)
    {
        std::vector<std::size_t> order(pts.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pts[a][2] < pts[b][2]; });
        double volume = 0.0;
        std::vector<std::array<double, 2>> active;
        for (std::size_t r = 0; r < order.size(); ++r) {
            auto const& p = pts[order[r]];
            active.push_back({ p[0], p[1] });
            double const next_z = r + 1 < order.size() ? pts[order[r + 1]][2] : ref[2];
            double const height = next_z - p[2];
            if (height > 0.0) {
                volume += hv2d(active, ref[0], ref[1]) * height;
            }
        }
        return volume;
    }

    inline void check_reference(std::span<std::vector<double> const> points, HvReferencePoint const& ref)
    {
        std::size_t const m = ref.coordinates.size();
        if (m < 2 || m > 3) {
            throw DimensionError("hypervolume: only 2 or 3 objectives are supported");
        }
        for (double v : ref.coordinates) {
            if (!std::isfinite(v)) {
                throw ReferenceError("hypervolume: reference point must be finite");
            }
        }
        for (auto const& p : points) {
            if (p.size() != m) {
                throw DimensionError("hypervolume: point/reference dimension mismatch");
            }
        }
    }

    inline bool strictly_better(std::span<double const> p, std::span<double const> ref)
    {
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (!(p[k] < ref[k])) {
                return false;
            }
        }
        return true;
    }

    inline double hv_exact(std::vector<std::vector<double>> const& pts, std::span<double const> ref)
    {
        if (pts.empty()) {
            return 0.0;
        }
        if (ref.size() == 2) {
            std::vector<std::array<double, 2>> p2;
            p2.reserve(pts.size());
            for (auto const& p : pts) {
                p2.push_back({ p[0], p[1] });
            }
            return hv2d(std::move(p2), ref[0], ref[1]);
        }
        return hv3d(pts, ref);
    }

} // namespace detail

// Exact hypervolume; points that are not strictly better than the reference
// in every objective are dropped and counted.
inline HvResult hypervolume_filtered(std::span<std::vector<double> const> points, HvReferencePoint const& ref)
{
    detail::check_reference(points, ref);
    HvResult out;
    std::vector<std::vector<double>> kept;
    for (auto const& p : points) {
        if (detail::strictly_better(p, ref.coordinates)) {
            kept.push_back(p);
        } else {
            ++out.discarded;
        }
    }
    out.value = detail::hv_exact(kept, ref.coordinates);
    return out;
}

// Exact hypervolume; the reference must be strictly worse than every point.
inline double hypervolume(std::span<std::vector<double> const> points, HvReferencePoint const& ref)
{
    detail::check_reference(points, ref);
    for (auto const& p : points) {
        if (!detail::strictly_better(p, ref.coordinates)) {
            throw ReferenceError("hypervolume: reference point is not strictly worse than every point");
        }
    }
    return detail::hv_exact({ points.begin(), points.end() }, ref.coordinates);
}

// Sum of the individual boxes, overlap counted repeatedly. Diagnostic only;
// it over-states the union whenever boxes overlap.
inline double rectangle_sum_diagnostic(std::span<std::vector<double> const> points, HvReferencePoint const& ref)
{
    double s = 0.0;
    for (auto const& p : points) {
        double box = 1.0;
        for (std::size_t k = 0; k < p.size(); ++k) {
            box *= std::max(0.0, ref.coordinates[k] - p[k]);
        }
        s += box;
    }
    return s;
}

inline HvReferencePoint default_reference_point(std::string const& problem_id, std::size_t num_objectives)
{
    if (problem_id == "SCHAFFER") {
        return { { 5.0, 5.0 } };
    }
    if (problem_id == "FONSECA") {
        return { { 1.0, 1.0 } };
    }
    return { std::vector<double>(num_objectives, 11.0) };
}

// ---------------------------------------------------------------------------
// Inverted generational distance

inline double igd(std::span<std::vector<double> const> approx, std::span<std::vector<double> const> reference_front)
{
    if (approx.empty() || reference_front.empty()) {
        throw DomainError("igd: both sets must be non-empty");
    }
    double total = 0.0;
    for (auto const& r : reference_front) {
        double best = std::numeric_limits<double>::infinity();
        for (auto const& a : approx) {
            best = std::min(best, squared_distance(a, r));
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference_front.size());
}

} // namespace ceopt

#endif
