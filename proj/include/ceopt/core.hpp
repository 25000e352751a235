#ifndef CEOPT_CORE_HPP
#define CEOPT_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ceopt {

// Error taxonomy. Every failure the library reports is one of these.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct StateError : std::logic_error {
    using std::logic_error::logic_error;
};
struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

using Genome = std::vector<double>;

class Bounds {
public:
    Bounds() = default;

    Bounds(std::vector<double> lower, std::vector<double> upper)
        : lower_(std::move(lower))
        , upper_(std::move(upper))
    {
        if (lower_.size() != upper_.size()) {
            throw DimensionError("bounds: lower/upper length mismatch");
        }
        for (std::size_t d = 0; d < lower_.size(); ++d) {
            if (!(lower_[d] < upper_[d])) {
                throw DomainError("bounds: lower must be strictly below upper in every dimension");
            }
        }
    }

    static Bounds uniform(std::size_t dim, double lo, double hi)
    {
        return Bounds(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    [[nodiscard]] std::size_t dimension() const noexcept { return lower_.size(); }
    [[nodiscard]] std::span<double const> lower() const noexcept { return lower_; }
    [[nodiscard]] std::span<double const> upper() const noexcept { return upper_; }
    [[nodiscard]] double lower(std::size_t d) const { return lower_[d]; }
    [[nodiscard]] double upper(std::size_t d) const { return upper_[d]; }
    [[nodiscard]] double width(std::size_t d) const { return upper_[d] - lower_[d]; }

    [[nodiscard]] bool contains(std::span<double const> x) const noexcept
    {
        if (x.size() != lower_.size()) {
            return false;
        }
        for (std::size_t d = 0; d < x.size(); ++d) {
            if (!(x[d] >= lower_[d] && x[d] <= upper_[d])) {
                return false;
            }
        }
        return true;
    }

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

struct Individual {
    Genome genome;
    std::optional<double> fitness;
    std::optional<std::vector<double>> objectives;
    std::uint64_t eval_id = 0;

    [[nodiscard]] bool evaluated() const noexcept { return fitness.has_value() || objectives.has_value(); }

    [[nodiscard]] double fit() const
    {
        if (!fitness) {
            throw StateError("individual has no single-objective fitness");
        }
        return *fitness;
    }

    [[nodiscard]] std::vector<double> const& objs() const
    {
        if (!objectives) {
            throw StateError("individual has no objective vector");
        }
        return *objectives;
    }
};

struct Population {
    std::vector<Individual> members;
    std::size_t generation = 0;

    [[nodiscard]] std::size_t size() const noexcept { return members.size(); }
    [[nodiscard]] bool empty() const noexcept { return members.empty(); }
    Individual& operator[](std::size_t i) { return members[i]; }
    Individual const& operator[](std::size_t i) const { return members[i]; }
    auto begin() { return members.begin(); }
    auto end() { return members.end(); }
    auto begin() const { return members.begin(); }
    auto end() const { return members.end(); }
};

// Global evaluation counter. Budgets are in evaluations; runners must check
// affordability before evaluating so the budget is never exceeded.
class EvaluationCounter {
public:
    EvaluationCounter() = default;
    explicit EvaluationCounter(std::uint64_t budget)
        : budget_(budget)
    {
    }

    [[nodiscard]] std::uint64_t count() const noexcept { return count_; }
    [[nodiscard]] std::optional<std::uint64_t> budget() const noexcept { return budget_; }

    [[nodiscard]] std::uint64_t remaining() const noexcept
    {
        if (!budget_) {
            return UINT64_MAX;
        }
        return *budget_ > count_ ? *budget_ - count_ : 0;
    }

    [[nodiscard]] bool can_afford(std::uint64_t n) const noexcept { return remaining() >= n; }

    std::uint64_t tick()
    {
        if (budget_ && count_ >= *budget_) {
            throw StateError("evaluation budget exhausted");
        }
        return ++count_;
    }

private:
    std::uint64_t count_ = 0;
    std::optional<std::uint64_t> budget_;
};

namespace detail {
    constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept
    {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

    constexpr std::uint64_t fnv1a(std::string_view s) noexcept
    {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (char c : s) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ULL;
        }
        return h;
    }
} // namespace detail

// Seeded random stream. Sub-streams are derived from (seed, purpose) so that
// adding draws for one purpose does not shift the sequence of another.
class RngStream {
public:
    using engine_type = std::mt19937_64;

    explicit RngStream(std::uint64_t seed = 0)
        : seed_(seed)
        , engine_(detail::splitmix64(seed))
    {
    }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    [[nodiscard]] RngStream substream(std::string_view purpose) const
    {
        return RngStream(detail::splitmix64(seed_ ^ detail::splitmix64(detail::fnv1a(purpose))));
    }

    [[nodiscard]] RngStream substream(std::uint64_t index) const
    {
        return RngStream(detail::splitmix64(seed_ + 0x632be59bd9b4e019ULL * (index + 1)));
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double normal() { return normal_(engine_); }

    int sign() { return (engine_() >> 63) != 0U ? 1 : -1; }

    std::size_t index(std::size_t n)
    {
        if (n == 0) {
            throw DomainError("rng: index over empty range");
        }
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    bool bernoulli(double p) { return uniform() < p; }

    engine_type& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    engine_type engine_;
    std::normal_distribution<double> normal_ { 0.0, 1.0 };
};

inline RngStream seeded_rng(std::uint64_t seed) { return RngStream(seed); }

inline Genome clamp(std::span<double const> genome, Bounds const& bounds)
{
    if (genome.size() != bounds.dimension()) {
        throw DimensionError("clamp: genome/bounds length mismatch");
    }
    Genome out(genome.begin(), genome.end());
    for (std::size_t d = 0; d < out.size(); ++d) {
        out[d] = std::clamp(out[d], bounds.lower(d), bounds.upper(d));
    }
    return out;
}

inline double squared_distance(std::span<double const> a, std::span<double const> b)
{
    if (a.size() != b.size()) {
        throw DimensionError("distance: length mismatch");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double const t = a[i] - b[i];
        s += t * t;
    }
    return s;
}

inline double euclidean_distance(std::span<double const> a, std::span<double const> b)
{
    return std::sqrt(squared_distance(a, b));
}

inline Genome random_genome(Bounds const& bounds, RngStream& rng)
{
    Genome g(bounds.dimension());
    for (std::size_t d = 0; d < g.size(); ++d) {
        g[d] = rng.uniform(bounds.lower(d), bounds.upper(d));
    }
    return g;
}

} // namespace ceopt

#endif
