#ifndef CEOPT_CHAOTIC_HPP
#define CEOPT_CHAOTIC_HPP

#include "ceopt/core.hpp"

#include <array>
#include <cmath>
#include <span>
#include <vector>

namespace ceopt {

inline constexpr double fixed_point_nudge = 1e-6;
inline constexpr double fixed_point_tolerance = 1e-12;

// Points where logistic iterates get absorbed (0, 1, the fixed point 0.75)
// or fall into them within one or two steps (0.25, 0.5).
inline constexpr std::array<double, 5> logistic_traps { 0.0, 0.25, 0.5, 0.75, 1.0 };

inline bool near_logistic_trap(double z) noexcept
{
    for (double t : logistic_traps) {
        if (std::abs(z - t) <= fixed_point_tolerance) {
            return true;
        }
    }
    return false;
}

// Moves z off a trap by +nudge, wrapping into (0, 1).
inline double nudge_off_trap(double z) noexcept
{
    while (near_logistic_trap(z)) {
        z += fixed_point_nudge;
        if (z >= 1.0) {
            z -= 1.0;
        }
    }
    return z;
}

inline double logistic_step(double z)
{
    if (!(z > 0.0 && z < 1.0)) {
        throw DomainError("logistic_step: input must lie in (0, 1)");
    }
    return nudge_off_trap(4.0 * z * (1.0 - z));
}

enum class ChaoticMode { offset, literal };

struct ChaoticState {
    std::vector<double> cp;
    std::vector<int> direction;

    [[nodiscard]] std::size_t dimension() const noexcept { return cp.size(); }
};

inline double draw_chaotic_value(RngStream& rng)
{
    return nudge_off_trap(rng.uniform(0.01, 0.99));
}

inline ChaoticState init_chaotic_state(std::size_t dim, RngStream& rng)
{
    ChaoticState s;
    s.cp.resize(dim);
    s.direction.resize(dim);
    for (std::size_t d = 0; d < dim; ++d) {
        s.cp[d] = draw_chaotic_value(rng);
        s.direction[d] = rng.sign();
    }
    return s;
}

struct ChaoticParams {
    ChaoticMode mode = ChaoticMode::offset;
    double width = 0.5; // step as a fraction of per-dimension search width (offset mode)
};

// Produces a mutant of `target` and advances `state`: every CP by one logistic
// step, every direction redrawn from {-1, +1}.
//   offset : m = t + D * CP * width * (upper - lower)
//   literal: m = t * (D * CP)
inline Genome chaotic_mutant(std::span<double const> target, ChaoticState& state, Bounds const& bounds,
    ChaoticParams const& params, RngStream& rng)
{
    if (target.size() != state.dimension() || target.size() != bounds.dimension()) {
        throw DimensionError("chaotic_mutant: state/genome/bounds dimension mismatch");
    }
    Genome m(target.size());
    for (std::size_t d = 0; d < m.size(); ++d) {
        double const dc = state.direction[d] * state.cp[d];
        if (params.mode == ChaoticMode::literal) {
            m[d] = target[d] * dc;
        } else {
            m[d] = target[d] + dc * params.width * bounds.width(d);
        }
    }
    m = clamp(m, bounds);
    for (std::size_t d = 0; d < m.size(); ++d) {
        state.cp[d] = logistic_step(state.cp[d]);
        state.direction[d] = rng.sign();
    }
    return m;
}

struct ChaoticMatrix {
    std::vector<double> values;
};

inline ChaoticMatrix init_chaotic_matrix(std::size_t n, RngStream& rng)
{
    ChaoticMatrix m;
    m.values.resize(n);
    for (auto& v : m.values) {
        v = draw_chaotic_value(rng);
    }
    return m;
}

inline ChaoticMatrix chaotic_matrix_step(ChaoticMatrix const& matrix)
{
    ChaoticMatrix next;
    next.values.reserve(matrix.values.size());
    for (double v : matrix.values) {
        next.values.push_back(logistic_step(v));
    }
    return next;
}

// floor(value_i * N), clipped to N - 1; may pair a member with itself.
inline std::vector<std::size_t> raw_competitor_indices(ChaoticMatrix const& matrix)
{
    std::size_t const n = matrix.values.size();
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto const c = static_cast<std::size_t>(std::floor(matrix.values[i] * static_cast<double>(n)));
        out[i] = std::min(c, n - 1);
    }
    return out;
}

// Raw competitors with self-pairing resolved to (i + 1) mod N.
inline std::vector<std::size_t> competitor_indices(ChaoticMatrix const& matrix)
{
    auto out = raw_competitor_indices(matrix);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (out[i] == i) {
            out[i] = (i + 1) % out.size();
        }
    }
    return out;
}

} // namespace ceopt

#endif
