#ifndef CEOPT_BENCHMARKS_COMPOSITE_HPP
#define CEOPT_BENCHMARKS_COMPOSITE_HPP

// Composition functions CF1..CF4 (F11..F20). Components are rotated, shifted
// and scaled basic functions blended by distance-based weights; every shift
// vector is a global maximum of value 0. Shift vectors and rotation matrices
// are generated from a fixed seed with a portable generator so the data can be
// regenerated bit-for-bit and exported to data/composite_data.txt.

#include "ceopt/benchmarks/single.hpp"
#include "ceopt/core.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

namespace ceopt::composite {

enum class BasicKind { sphere, griewank, rastrigin, weierstrass, ef8f2 };

inline char const* to_string(BasicKind k)
{
    switch (k) {
    case BasicKind::sphere:
        return "sphere";
    case BasicKind::griewank:
        return "griewank";
    case BasicKind::rastrigin:
        return "rastrigin";
    case BasicKind::weierstrass:
        return "weierstrass";
    case BasicKind::ef8f2:
        return "ef8f2";
    }
    return "?";
}

inline double evaluate_basic(BasicKind k, std::span<double const> z)
{
    switch (k) {
    case BasicKind::sphere:
        return single::basic::sphere(z);
    case BasicKind::griewank:
        return single::basic::griewank(z);
    case BasicKind::rastrigin:
        return single::basic::rastrigin(z);
    case BasicKind::weierstrass:
        return single::basic::weierstrass(z);
    case BasicKind::ef8f2:
        return single::basic::ef8f2(z);
    }
    return 0.0;
}

struct Recipe {
    std::vector<BasicKind> components;
    std::vector<double> sigma;
    std::vector<double> lambda;
    bool rotated = false;
};

// CF index is 1-based, matching the composite numbering.
inline Recipe recipe(int cf)
{
    using B = BasicKind;
    switch (cf) {
    case 1:
        return { { B::griewank, B::griewank, B::weierstrass, B::weierstrass, B::sphere, B::sphere },
            { 1, 1, 1, 1, 1, 1 },
            { 1.0, 1.0, 8.0, 8.0, 1.0 / 5.0, 1.0 / 5.0 },
            false };
    case 2:
        return { { B::rastrigin, B::rastrigin, B::weierstrass, B::weierstrass, B::griewank, B::griewank, B::sphere,
                     B::sphere },
            { 1, 1, 1, 1, 1, 1, 1, 1 },
            { 1.0, 1.0, 10.0, 10.0, 1.0 / 10.0, 1.0 / 10.0, 1.0 / 7.0, 1.0 / 7.0 },
            false };
    case 3:
        return { { B::ef8f2, B::ef8f2, B::weierstrass, B::weierstrass, B::griewank, B::griewank },
            { 1, 1, 2, 2, 2, 2 },
            { 1.0 / 4.0, 1.0 / 10.0, 2.0, 1.0, 2.0, 5.0 },
            true };
    case 4:
        return { { B::rastrigin, B::rastrigin, B::ef8f2, B::ef8f2, B::weierstrass, B::weierstrass, B::griewank,
                     B::griewank },
            { 1, 1, 1, 1, 1, 2, 2, 2 },
            { 4.0, 1.0, 4.0, 1.0, 1.0 / 10.0, 1.0 / 5.0, 1.0 / 10.0, 1.0 / 40.0 },
            true };
    default:
        throw LookupError("composite: unknown composition index " + std::to_string(cf));
    }
}

// Portable generator: splitmix64 stream, 53-bit uniforms, Box-Muller normals.
class PortableGenerator {
public:
    explicit PortableGenerator(std::uint64_t seed)
        : state_(seed)
    {
    }

    std::uint64_t next()
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return ceopt::detail::splitmix64(state_);
    }

    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double normal()
    {
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        double const u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

private:
    std::uint64_t state_;
};

inline constexpr std::uint64_t data_seed = 20130607ULL;
inline constexpr double shift_range = 4.0;
inline constexpr double min_shift_separation = 1.0;

struct Data {
    std::size_t dimension = 0;
    std::vector<std::vector<double>> shifts;
    // row-major D x D per component
    std::vector<std::vector<double>> rotations;
};

inline std::vector<double> random_rotation(std::size_t dim, PortableGenerator& gen)
{
    std::vector<double> m(dim * dim);
    for (auto& v : m) {
        v = gen.normal();
    }
    // Gram-Schmidt on rows
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) {
                dot += m[i * dim + k] * m[j * dim + k];
            }
            for (std::size_t k = 0; k < dim; ++k) {
                m[i * dim + k] -= dot * m[j * dim + k];
            }
        }
        double norm = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            norm += m[i * dim + k] * m[i * dim + k];
        }
        norm = std::sqrt(norm);
        for (std::size_t k = 0; k < dim; ++k) {
            m[i * dim + k] /= norm;
        }
    }
    return m;
}

inline std::vector<double> identity(std::size_t dim)
{
    std::vector<double> m(dim * dim, 0.0);
    for (std::size_t i = 0; i < dim; ++i) {
        m[i * dim + i] = 1.0;
    }
    return m;
}

inline Data generate_data(int cf, std::size_t dim)
{
    auto const r = recipe(cf);
    PortableGenerator gen(data_seed * 1000003ULL + static_cast<std::uint64_t>(cf) * 101ULL + dim);
    Data data;
    data.dimension = dim;
    while (data.shifts.size() < r.components.size()) {
        std::vector<double> o(dim);
        for (auto& v : o) {
            v = -shift_range + 2.0 * shift_range * gen.uniform();
        }
        bool separated = true;
        for (auto const& prev : data.shifts) {
            if (euclidean_distance(prev, o) < min_shift_separation) {
                separated = false;
                break;
            }
        }
        if (separated) {
            data.shifts.push_back(std::move(o));
        }
    }
    for (std::size_t i = 0; i < r.components.size(); ++i) {
        data.rotations.push_back(r.rotated ? random_rotation(dim, gen) : identity(dim));
    }
    return data;
}

class Function {
public:
    Function(int cf, std::size_t dim)
        : cf_(cf)
        , recipe_(recipe(cf))
        , data_(generate_data(cf, dim))
    {
        std::vector<double> five(dim);
        fmax_.resize(recipe_.components.size());
        for (std::size_t i = 0; i < recipe_.components.size(); ++i) {
            std::fill(five.begin(), five.end(), 5.0 / recipe_.lambda[i]);
            auto const z = rotate(i, five);
            fmax_[i] = evaluate_basic(recipe_.components[i], z);
        }
    }

    [[nodiscard]] int index() const noexcept { return cf_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return data_.dimension; }
    [[nodiscard]] Data const& data() const noexcept { return data_; }
    [[nodiscard]] Recipe const& recipe_spec() const noexcept { return recipe_; }

    // Maximization form: value <= 0 everywhere, 0 at every shift vector.
    double operator()(std::span<double const> x) const
    {
        std::size_t const k = recipe_.components.size();
        std::size_t const dim = data_.dimension;
        std::vector<double> w(k);
        double maxw = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            double const s = squared_distance(x, data_.shifts[i]);
            w[i] = std::exp(-s / (2.0 * static_cast<double>(dim) * recipe_.sigma[i] * recipe_.sigma[i]));
            maxw = std::max(maxw, w[i]);
        }
        double const maxw10 = std::pow(maxw, 10.0);
        double wsum = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (w[i] != maxw) {
                w[i] *= 1.0 - maxw10;
            }
            wsum += w[i];
        }
        for (auto& v : w) {
            v = wsum == 0.0 ? 1.0 / static_cast<double>(k) : v / wsum;
        }
        std::vector<double> shifted(dim);
        double result = 0.0;
        for (std::size_t i = 0; i < k; ++i) {
            if (w[i] == 0.0) {
                continue;
            }
            for (std::size_t d = 0; d < dim; ++d) {
                shifted[d] = (x[d] - data_.shifts[i][d]) / recipe_.lambda[i];
            }
            auto const z = rotate(i, shifted);
            double const fi = 2000.0 * evaluate_basic(recipe_.components[i], z) / fmax_[i];
            result += w[i] * fi;
        }
        return -result;
    }

private:
    std::vector<double> rotate(std::size_t comp, std::span<double const> v) const
    {
        std::size_t const dim = data_.dimension;
        auto const& m = data_.rotations[comp];
        std::vector<double> z(dim, 0.0);
        for (std::size_t r = 0; r < dim; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < dim; ++c) {
                s += m[r * dim + c] * v[c];
            }
            z[r] = s;
        }
        return z;
    }

    int cf_;
    Recipe recipe_;
    Data data_;
    std::vector<double> fmax_;
};

} // namespace ceopt::composite

#endif
