#ifndef CEOPT_BENCHMARKS_MULTI_HPP
#define CEOPT_BENCHMARKS_MULTI_HPP

// Multi-objective test problems, minimization form.

#include <cmath>
#include <numbers>
#include <span>

namespace ceopt::multi {

inline constexpr double half_pi = std::numbers::pi / 2.0;

namespace detail {
    inline double mean_tail(std::span<double const> x)
    {
        double s = 0.0;
        for (std::size_t i = 1; i < x.size(); ++i) {
            s += x[i];
        }
        return x.size() > 1 ? s / static_cast<double>(x.size() - 1) : 0.0;
    }

    // distance function shared by DTLZ1 and DTLZ3
    inline double g_rastrigin(std::span<double const> xm)
    {
        double s = 0.0;
        for (double v : xm) {
            s += (v - 0.5) * (v - 0.5) - std::cos(20.0 * std::numbers::pi * (v - 0.5));
        }
        return 100.0 * (static_cast<double>(xm.size()) + s);
    }

    inline double g_sphere(std::span<double const> xm)
    {
        double s = 0.0;
        for (double v : xm) {
            s += (v - 0.5) * (v - 0.5);
        }
        return s;
    }

    // spherical shape for M objectives given angles theta[0..M-2] (already in [0, pi/2])
    inline void spherical(std::span<double const> theta, double radius, std::span<double> f)
    {
        std::size_t const m = f.size();
        for (std::size_t i = 0; i < m; ++i) {
            double v = radius;
            for (std::size_t j = 0; j + 1 < m - i; ++j) {
                v *= std::cos(theta[j]);
            }
            if (i > 0) {
                v *= std::sin(theta[m - 1 - i]);
            }
            f[i] = v;
        }
    }
} // namespace detail

inline void zdt1(std::span<double const> x, std::span<double> f)
{
    double const g = 1.0 + 9.0 * detail::mean_tail(x);
    f[0] = x[0];
    f[1] = g * (1.0 - std::sqrt(x[0] / g));
}

inline void zdt2(std::span<double const> x, std::span<double> f)
{
    double const g = 1.0 + 9.0 * detail::mean_tail(x);
    f[0] = x[0];
    f[1] = g * (1.0 - (x[0] / g) * (x[0] / g));
}

inline void zdt3(std::span<double const> x, std::span<double> f)
{
    double const g = 1.0 + 9.0 * detail::mean_tail(x);
    double const h = 1.0 - std::sqrt(x[0] / g) - (x[0] / g) * std::sin(10.0 * std::numbers::pi * x[0]);
    f[0] = x[0];
    f[1] = g * h;
}

inline void zdt4(std::span<double const> x, std::span<double> f)
{
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        s += x[i] * x[i] - 10.0 * std::cos(4.0 * std::numbers::pi * x[i]);
    }
    double const g = 1.0 + 10.0 * static_cast<double>(x.size() - 1) + s;
    f[0] = x[0];
    f[1] = g * (1.0 - std::sqrt(x[0] / g));
}

inline void zdt6(std::span<double const> x, std::span<double> f)
{
    double const s6 = std::pow(std::sin(6.0 * std::numbers::pi * x[0]), 6.0);
    f[0] = 1.0 - std::exp(-4.0 * x[0]) * s6;
    double const g = 1.0 + 9.0 * std::pow(detail::mean_tail(x), 0.25);
    f[1] = g * (1.0 - (f[0] / g) * (f[0] / g));
}

inline void dtlz1(std::span<double const> x, std::span<double> f)
{
    std::size_t const m = f.size();
    double const g = detail::g_rastrigin(x.subspan(m - 1));
    for (std::size_t i = 0; i < m; ++i) {
        double v = 0.5 * (1.0 + g);
        for (std::size_t j = 0; j + 1 < m - i; ++j) {
            v *= x[j];
        }
        if (i > 0) {
            v *= 1.0 - x[m - 1 - i];
        }
        f[i] = v;
    }
}

namespace detail {
    inline void dtlz_spherical(std::span<double const> x, std::span<double> f, double g, double alpha)
    {
        std::size_t const m = f.size();
        double theta[16];
        for (std::size_t j = 0; j + 1 < m; ++j) {
            theta[j] = std::pow(x[j], alpha) * half_pi;
        }
        spherical(std::span<double const>(theta, m - 1), 1.0 + g, f);
    }
} // namespace detail

inline void dtlz2(std::span<double const> x, std::span<double> f)
{
    detail::dtlz_spherical(x, f, detail::g_sphere(x.subspan(f.size() - 1)), 1.0);
}

inline void dtlz3(std::span<double const> x, std::span<double> f)
{
    detail::dtlz_spherical(x, f, detail::g_rastrigin(x.subspan(f.size() - 1)), 1.0);
}

inline void dtlz4(std::span<double const> x, std::span<double> f)
{
    detail::dtlz_spherical(x, f, detail::g_sphere(x.subspan(f.size() - 1)), 100.0);
}

namespace detail {
    inline void dtlz_degenerate(std::span<double const> x, std::span<double> f, double g)
    {
        std::size_t const m = f.size();
        double theta[16];
        theta[0] = x[0] * half_pi;
        for (std::size_t j = 1; j + 1 < m; ++j) {
            theta[j] = std::numbers::pi / (4.0 * (1.0 + g)) * (1.0 + 2.0 * g * x[j]);
        }
        spherical(std::span<double const>(theta, m - 1), 1.0 + g, f);
    }
} // namespace detail

inline void dtlz5(std::span<double const> x, std::span<double> f)
{
    detail::dtlz_degenerate(x, f, detail::g_sphere(x.subspan(f.size() - 1)));
}

inline void dtlz6(std::span<double const> x, std::span<double> f)
{
    double g = 0.0;
    for (double v : x.subspan(f.size() - 1)) {
        g += std::pow(v, 0.1);
    }
    detail::dtlz_degenerate(x, f, g);
}

inline void schaffer(std::span<double const> x, std::span<double> f)
{
    f[0] = x[0] * x[0];
    f[1] = (x[0] - 2.0) * (x[0] - 2.0);
}

inline void fonseca_fleming(std::span<double const> x, std::span<double> f)
{
    double const c = 1.0 / std::sqrt(static_cast<double>(x.size()));
    double a = 0.0;
    double b = 0.0;
    for (double v : x) {
        a += (v - c) * (v - c);
        b += (v + c) * (v + c);
    }
    f[0] = 1.0 - std::exp(-a);
    f[1] = 1.0 - std::exp(-b);
}

} // namespace ceopt::multi

#endif
