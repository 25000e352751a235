#ifndef CEOPT_CLUSTERING_HPP
#define CEOPT_CLUSTERING_HPP

#include "ceopt/core.hpp"

#include <limits>
#include <span>
#include <vector>

namespace ceopt {

struct ClusterAssignment {
    std::vector<std::size_t> labels;   // cluster id per individual
    std::vector<std::size_t> vertices; // vertex index per cluster id, ascending
    std::vector<std::size_t> link;     // nearest-higher neighbour, or self for vertices
    double radius = 0.0;

    [[nodiscard]] std::size_t num_clusters() const noexcept { return vertices.size(); }
    [[nodiscard]] bool is_vertex(std::size_t i) const noexcept { return link[i] == i; }
};

// Pairwise Euclidean distance matrix, row-major.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::span<Genome const> points)
        : n_(points.size())
        , d_(n_ * n_, 0.0)
    {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = i + 1; j < n_; ++j) {
                double const v = euclidean_distance(points[i], points[j]);
                d_[i * n_ + j] = v;
                d_[j * n_ + i] = v;
            }
        }
    }

    [[nodiscard]] std::size_t size() const noexcept { return n_; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const noexcept { return d_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> d_;
};

namespace detail {
    // strict total order: higher fitness first, lower index breaks exact ties
    inline bool ranks_above(std::span<double const> f, std::size_t j, std::size_t i)
    {
        return f[j] > f[i] || (f[j] == f[i] && j < i);
    }
} // namespace detail

// Nearest-higher-neighbour clustering within radius R. An individual that no
// neighbour outranks is a vertex; every other individual links to its nearest
// outranking neighbour (lowest index on distance ties) and inherits that
// chain's vertex as its label.
inline ClusterAssignment persistence_cluster(DistanceMatrix const& dist, std::span<double const> fitness, double radius)
{
    if (!(radius > 0.0)) {
        throw DomainError("persistence_cluster: radius must be positive");
    }
    std::size_t const n = fitness.size();
    if (dist.size() != n) {
        throw DimensionError("persistence_cluster: distance matrix / fitness size mismatch");
    }
    ClusterAssignment out;
    out.radius = radius;
    out.link.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = i;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i || !(dist(i, j) < radius) || !detail::ranks_above(fitness, j, i)) {
                continue;
            }
            if (dist(i, j) < best_d) {
                best_d = dist(i, j);
                best = j;
            }
        }
        out.link[i] = best;
    }
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> root_label(n, unset);
    for (std::size_t i = 0; i < n; ++i) {
        if (out.link[i] == i) {
            root_label[i] = out.vertices.size();
            out.vertices.push_back(i);
        }
    }
    out.labels.assign(n, unset);
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t k = i;
        chain.clear();
        while (out.labels[k] == unset && out.link[k] != k) {
            chain.push_back(k);
            k = out.link[k];
        }
        std::size_t const label = out.labels[k] != unset ? out.labels[k] : root_label[k];
        out.labels[k] = label;
        for (auto c : chain) {
            out.labels[c] = label;
        }
    }
    return out;
}

inline ClusterAssignment persistence_cluster(Population const& population, double radius)
{
    std::vector<Genome> points;
    std::vector<double> fitness;
    points.reserve(population.size());
    fitness.reserve(population.size());
    for (auto const& ind : population) {
        points.push_back(ind.genome);
        fitness.push_back(ind.fit());
    }
    return persistence_cluster(DistanceMatrix(points), fitness, radius);
}

inline std::vector<Individual> cluster_vertices(ClusterAssignment const& assignment, Population const& population)
{
    std::vector<Individual> out;
    out.reserve(assignment.vertices.size());
    for (auto v : assignment.vertices) {
        out.push_back(population[v]);
    }
    return out;
}

} // namespace ceopt

#endif
