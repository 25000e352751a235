#ifndef CEOPT_PARETO_HPP
#define CEOPT_PARETO_HPP

// Dominance, non-dominated sorting and crowding distance (minimization).

#include "ceopt/core.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace ceopt {

using Fronts = std::vector<std::vector<std::size_t>>;

inline bool dominates(std::span<double const> a, std::span<double const> b)
{
    if (a.size() != b.size()) {
        throw DimensionError("dominates: objective vectors differ in length");
    }
    bool strictly = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] > b[k]) {
            return false;
        }
        if (a[k] < b[k]) {
            strictly = true;
        }
    }
    return strictly;
}

// Deb's fast non-dominated sort. Indices inside each front are ascending.
inline Fronts fast_nondominated_sort(std::span<std::vector<double> const> objectives)
{
    std::size_t const n = objectives.size();
    Fronts fronts;
    if (n == 0) {
        return fronts;
    }
    std::size_t const m = objectives.front().size();
    for (auto const& v : objectives) {
        if (v.size() != m) {
            throw DimensionError("fast_nondominated_sort: objective vectors differ in length");
        }
    }
    std::vector<std::vector<std::size_t>> dominated_by_me(n);
    std::vector<std::size_t> domination_count(n, 0);
    std::vector<std::size_t> current;
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            if (dominates(objectives[p], objectives[q])) {
                dominated_by_me[p].push_back(q);
                ++domination_count[q];
            } else if (dominates(objectives[q], objectives[p])) {
                dominated_by_me[q].push_back(p);
                ++domination_count[p];
            }
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        if (domination_count[p] == 0) {
            current.push_back(p);
        }
    }
    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (auto p : current) {
            for (auto q : dominated_by_me[p]) {
                if (--domination_count[q] == 0) {
                    next.push_back(q);
                }
            }
        }
        std::sort(next.begin(), next.end());
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

// Rank (front index) per individual.
inline std::vector<std::size_t> front_ranks(Fronts const& fronts, std::size_t n)
{
    std::vector<std::size_t> rank(n, 0);
    for (std::size_t f = 0; f < fronts.size(); ++f) {
        for (auto i : fronts[f]) {
            rank[i] = f;
        }
    }
    return rank;
}

// NSGA-II crowding distance of one front. Boundary points of every objective
// are infinite; interior points sum the normalized neighbour gaps.
inline std::vector<double> crowding_distance(std::span<std::vector<double> const> front)
{
    std::size_t const n = front.size();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(n, 0.0);
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }
    std::size_t const m = front.front().size();
    std::vector<std::size_t> order(n);
    for (std::size_t k = 0; k < m; ++k) {
        std::iota(order.begin(), order.end(), 0);
        // value then index, so equal values never depend on input order for the extremes' values
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return front[a][k] < front[b][k] || (front[a][k] == front[b][k] && a < b);
        });
        double const lo = front[order.front()][k];
        double const hi = front[order.back()][k];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        if (hi == lo) {
            continue;
        }
        for (std::size_t r = 1; r + 1 < n; ++r) {
            dist[order[r]] += (front[order[r + 1]][k] - front[order[r - 1]][k]) / (hi - lo);
        }
    }
    return dist;
}

// Crowding distance for every individual, computed front by front.
inline std::vector<double> crowding_by_front(std::span<std::vector<double> const> objectives, Fronts const& fronts)
{
    std::vector<double> out(objectives.size(), 0.0);
    std::vector<std::vector<double>> buf;
    for (auto const& front : fronts) {
        buf.clear();
        for (auto i : front) {
            buf.push_back(objectives[i]);
        }
        auto const cd = crowding_distance(buf);
        for (std::size_t r = 0; r < front.size(); ++r) {
            out[front[r]] = cd[r];
        }
    }
    return out;
}

// Mutually non-dominated set of individuals. Inserting a dominated or
// duplicate point is a no-op; inserting a dominating point evicts what it dominates.
class ParetoArchive {
public:
    explicit ParetoArchive(std::size_t capacity = std::numeric_limits<std::size_t>::max())
        : capacity_(capacity)
    {
    }

    bool insert(Individual const& ind)
    {
        auto const& f = ind.objs();
        for (auto const& m : members_) {
            if (dominates(m.objs(), f) || m.objs() == f) {
                return false;
            }
        }
        std::erase_if(members_, [&](Individual const& m) { return dominates(f, m.objs()); });
        if (members_.size() >= capacity_) {
            return false;
        }
        members_.push_back(ind);
        return true;
    }

    [[nodiscard]] std::vector<Individual> const& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

private:
    std::size_t capacity_;
    std::vector<Individual> members_;
};

} // namespace ceopt

#endif
