#ifndef CEOPT_BENCHMARKS_SINGLE_HPP
#define CEOPT_BENCHMARKS_SINGLE_HPP

// Multimodal single-objective test functions in maximization form.
// Definitions follow the CEC2013 niching benchmark; the composite functions
// live in composite.hpp.

#include <cmath>
#include <numbers>
#include <span>

namespace ceopt::single {

// F1, x in [0, 30]; global maxima 200 at x = 0 and x = 30.
inline double five_uneven_peak_trap(std::span<double const> x)
{
    double const v = x[0];
    if (v < 2.5) {
        return 80.0 * (2.5 - v);
    }
    if (v < 5.0) {
        return 64.0 * (v - 2.5);
    }
    if (v < 7.5) {
        return 64.0 * (7.5 - v);
    }
    if (v < 12.5) {
        return 28.0 * (v - 7.5);
    }
    if (v < 17.5) {
        return 28.0 * (17.5 - v);
    }
    if (v < 22.5) {
        return 32.0 * (v - 17.5);
    }
    if (v < 27.5) {
        return 32.0 * (27.5 - v);
    }
    return 80.0 * (v - 27.5);
}

// F2, x in [0, 1]; five maxima of value 1 at x = 0.1, 0.3, ..., 0.9.
inline double equal_maxima(std::span<double const> x)
{
    double const s = std::sin(5.0 * std::numbers::pi * x[0]);
    return s * s * s * s * s * s;
}

// F3, x in [0, 1]; one global maximum near x = 0.08.
inline double uneven_decreasing_maxima(std::span<double const> x)
{
    double const v = x[0];
    double const t = (v - 0.08) / 0.854;
    double const envelope = std::exp(-2.0 * std::log(2.0) * t * t);
    double const s = std::sin(5.0 * std::numbers::pi * (std::pow(v, 0.75) - 0.05));
    return envelope * s * s * s * s * s * s;
}

// F4, x in [-6, 6]^2; four maxima of value 200.
inline double himmelblau(std::span<double const> x)
{
    double const a = x[0] * x[0] + x[1] - 11.0;
    double const b = x[0] + x[1] * x[1] - 7.0;
    return 200.0 - a * a - b * b;
}

// F5, x in [-1.9, 1.9] x [-1.1, 1.1]; two global maxima.
inline double six_hump_camel_back(std::span<double const> x)
{
    double const x2 = x[0] * x[0];
    double const y2 = x[1] * x[1];
    return -((4.0 - 2.1 * x2 + x2 * x2 / 3.0) * x2 + x[0] * x[1] + (4.0 * y2 - 4.0) * y2);
}

inline double shubert_factor(double v)
{
    double s = 0.0;
    for (int j = 1; j <= 5; ++j) {
        s += j * std::cos((j + 1) * v + j);
    }
    return s;
}

// F6 (2-D) / F8 (3-D), x in [-10, 10]^D.
inline double shubert(std::span<double const> x)
{
    double p = 1.0;
    for (double v : x) {
        p *= shubert_factor(v);
    }
    return -p;
}

// F7 (2-D) / F9 (3-D), x in [0.25, 10]^D; maxima of value 1.
inline double vincent(std::span<double const> x)
{
    double s = 0.0;
    for (double v : x) {
        s += std::sin(10.0 * std::log(v));
    }
    return s / static_cast<double>(x.size());
}

// F10, x in [0, 1]^2; 12 maxima of value -2.
inline double modified_rastrigin(std::span<double const> x)
{
    constexpr double k[] = { 3.0, 4.0 };
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += 10.0 + 9.0 * std::cos(2.0 * std::numbers::pi * k[i % 2] * x[i]);
    }
    return -s;
}

// Basic (minimization) components of the composite functions.
namespace basic {

    inline double sphere(std::span<double const> x)
    {
        double s = 0.0;
        for (double v : x) {
            s += v * v;
        }
        return s;
    }

    inline double griewank(std::span<double const> x)
    {
        double s = 0.0;
        double p = 1.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            s += x[i] * x[i] / 4000.0;
            p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
        }
        return 1.0 + s - p;
    }

    inline double rastrigin(std::span<double const> x)
    {
        double s = 0.0;
        for (double v : x) {
            s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
        }
        return s;
    }

    inline double weierstrass(std::span<double const> x)
    {
        constexpr double a = 0.5;
        constexpr double b = 3.0;
        constexpr int kmax = 20;
        double sum = 0.0;
        for (double v : x) {
            double ak = 1.0;
            double bk = 1.0;
            for (int k = 0; k <= kmax; ++k) {
                sum += ak * std::cos(2.0 * std::numbers::pi * bk * (v + 0.5));
                ak *= a;
                bk *= b;
            }
        }
        double offset = 0.0;
        double ak = 1.0;
        double bk = 1.0;
        for (int k = 0; k <= kmax; ++k) {
            offset += ak * std::cos(std::numbers::pi * bk);
            ak *= a;
            bk *= b;
        }
        return sum - static_cast<double>(x.size()) * offset;
    }

    // Expanded Griewank-plus-Rosenbrock.
    inline double ef8f2(std::span<double const> x)
    {
        auto f8f2 = [](double a, double b) {
            double const f2 = 100.0 * (a * a - b) * (a * a - b) + (1.0 - a) * (1.0 - a);
            return 1.0 + f2 * f2 / 4000.0 - std::cos(f2);
        };
        double s = 0.0;
        std::size_t const n = x.size();
        for (std::size_t i = 0; i < n; ++i) {
            s += f8f2(x[i] + 1.0, x[(i + 1) % n] + 1.0);
        }
        return s;
    }

} // namespace basic

} // namespace ceopt::single

#endif
