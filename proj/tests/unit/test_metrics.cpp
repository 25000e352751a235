#include "catch_amalgamated.hpp"

#include "ceopt/metrics.hpp"

#include "../support/oracles.hpp"

#include <algorithm>
#include <random>

using namespace ceopt;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

Individual at(std::vector<double> x, double f)
{
    Individual ind;
    ind.genome = std::move(x);
    ind.fitness = f;
    return ind;
}

std::vector<std::vector<double>> random_set(std::mt19937_64& gen, std::size_t n, std::size_t m)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::vector<double>> pts(n, std::vector<double>(m));
    for (auto& p : pts) {
        for (auto& v : p) {
            v = u(gen);
        }
    }
    return pts;
}

} // namespace

TEST_CASE("peak counting examples", "[metrics]")
{
    auto const reg = known_optima("F2");
    auto const params = PeakCountParams::from_registry(reg);
    std::vector<Individual> all;
    for (double x : { 0.1, 0.3, 0.5, 0.7, 0.9 }) {
        all.push_back(at({ x }, 1.0));
    }
    CHECK(count_found_peaks(all, reg, params) == 5);

    std::vector<Individual> twice { at({ 0.1 }, 1.0), at({ 0.1 + 1e-4 }, 1.0) };
    CHECK(count_found_peaks(twice, reg, params) == 1);

    std::vector<Individual> far { at({ 0.2 }, 1.0) };
    CHECK(count_found_peaks(far, reg, params) == 0);

    // right place, value outside the accuracy band
    std::vector<Individual> low { at({ 0.1 }, 1.0 - 2e-4) };
    CHECK(count_found_peaks(low, reg, params) == 0);
    CHECK(count_found_peaks(low, reg, PeakCountParams::from_registry(reg, 1e-3)) == 1);

    std::vector<Individual> wrong_dim { at({ 0.1, 0.1 }, 1.0) };
    CHECK_THROWS_AS(count_found_peaks(wrong_dim, reg, params), LookupError);
    CHECK_THROWS_AS(count_found_peaks(all, reg, PeakCountParams { 0.0, 0.01 }), ConfigError);
}

TEST_CASE("value-only registries dedupe by niche radius", "[metrics]")
{
    auto const reg = known_optima("F11");
    REQUIRE_FALSE(reg.has_locations());
    auto const params = PeakCountParams::from_registry(reg);
    std::vector<Individual> c { at({ 1.0, 1.0 }, 0.0), at({ 1.0, 1.005 }, -5e-5), at({ -2.0, 3.0 }, -1e-5),
        at({ 3.0, 3.0 }, -1.0) };
    CHECK(count_found_peaks(c, reg, params) == 2);

    std::vector<Individual> many;
    for (int i = 0; i < 20; ++i) {
        many.push_back(at({ static_cast<double>(i), 0.0 }, 0.0));
    }
    CHECK(count_found_peaks(many, reg, params) == reg.count_global);
}

TEST_CASE("peak ratio arithmetic", "[metrics]")
{
    std::vector<std::size_t> const a { 5, 4 };
    CHECK(peak_ratio(a, 5, 2) == 0.9);
    std::vector<std::size_t> const full(7, 3);
    CHECK(peak_ratio(full, 3, 7) == 1.0);
    std::vector<std::size_t> const over { 6 };
    CHECK_THROWS_AS(peak_ratio(over, 5, 1), CountingError);
    CHECK_THROWS_AS(peak_ratio(a, 5, 3), ConfigError);
    CHECK_THROWS_AS(peak_ratio(a, 0, 2), ConfigError);
}

TEST_CASE("peak ratio ignores run order", "[metrics]")
{
    std::mt19937_64 gen(4);
    for (int t = 0; t < 200; ++t) {
        std::size_t const nkp = 1 + gen() % 20;
        std::size_t const nr = 1 + gen() % 30;
        std::vector<std::size_t> v(nr);
        std::size_t sum = 0;
        for (auto& x : v) {
            x = gen() % (nkp + 1);
            sum += x;
        }
        double const r = peak_ratio(v, nkp, nr);
        std::shuffle(v.begin(), v.end(), gen);
        REQUIRE(peak_ratio(v, nkp, nr) == r);
        REQUIRE(r == static_cast<double>(sum) / static_cast<double>(nkp * nr));
        REQUIRE(r >= 0.0);
        REQUIRE(r <= 1.0);
    }
}

TEST_CASE("hypervolume examples", "[metrics]")
{
    HvReferencePoint const r2 { { 2.0, 2.0 } };
    std::vector<std::vector<double>> const one { { 1.0, 1.0 } };
    CHECK(hypervolume(one, r2) == 1.0);

    HvReferencePoint const r3 { { 3.0, 3.0 } };
    std::vector<std::vector<double>> const pair { { 1.0, 2.0 }, { 2.0, 1.0 } };
    CHECK(hypervolume(pair, r3) == 3.0);
    CHECK(rectangle_sum_diagnostic(pair, r3) == 4.0);
    std::mt19937_64 gen(5);
    auto const mc = oracle::mc_hypervolume(pair, r3.coordinates, 1000000, gen);
    CHECK_THAT(mc.value, WithinRel(3.0, 0.005));

    std::vector<std::vector<double>> const dom { { 1.0, 1.0 }, { 1.5, 1.5 } };
    CHECK(hypervolume(dom, r2) == 1.0);

    HvReferencePoint const cube { { 1.0, 1.0, 1.0 } };
    std::vector<std::vector<double>> const corner { { 0.0, 0.0, 0.0 } };
    CHECK(hypervolume(corner, cube) == 1.0);
    std::vector<std::vector<double>> const steps { { 0.0, 0.5, 0.5 }, { 0.5, 0.0, 0.5 }, { 0.5, 0.5, 0.0 } };
    // three half-slabs: 3 * 0.25 - 3 * 0.125 + 0.125
    CHECK_THAT(hypervolume(steps, cube), WithinAbs(0.5, 1e-15));
}

TEST_CASE("hypervolume reference handling", "[metrics]")
{
    HvReferencePoint const r2 { { 2.0, 2.0 } };
    std::vector<std::vector<double>> const touching { { 1.0, 1.0 }, { 2.0, 0.5 }, { 3.0, 0.0 } };
    CHECK_THROWS_AS(hypervolume(touching, r2), ReferenceError);
    auto const filtered = hypervolume_filtered(touching, r2);
    CHECK(filtered.value == 1.0);
    CHECK(filtered.discarded == 2);
    CHECK(hypervolume(std::vector<std::vector<double>> {}, r2) == 0.0);
    std::vector<std::vector<double>> const wrong { { 1.0, 1.0, 1.0 } };
    CHECK_THROWS(hypervolume(wrong, r2));
}

TEST_CASE("hypervolume agrees with box sampling", "[metrics]")
{
    std::mt19937_64 gen(6);
    for (int t = 0; t < 40; ++t) {
        std::size_t const m = 2 + t % 2;
        auto const pts = random_set(gen, 1 + t % 20, m);
        std::vector<double> const ref(m, 1.1);
        double const exact = hypervolume(pts, { ref });
        auto const mc = oracle::mc_hypervolume(pts, ref, 200000, gen);
        INFO("instance " << t << " exact " << exact << " mc " << mc.value << " se " << mc.stderr_);
        CHECK(std::abs(exact - mc.value) <= 3.0 * mc.stderr_ + 1e-12);
    }
}

TEST_CASE("hypervolume is monotone and blind to dominated points", "[metrics]")
{
    std::mt19937_64 gen(7);
    for (int t = 0; t < 200; ++t) {
        std::size_t const m = 2 + t % 2;
        auto pts = random_set(gen, 1 + t % 20, m);
        HvReferencePoint const ref { std::vector<double>(m, 1.0 + 1e-9) };
        double const base = hypervolume(pts, ref);

        auto const fronts = fast_nondominated_sort(pts);
        std::vector<std::vector<double>> nd;
        for (auto i : fronts.front()) {
            nd.push_back(pts[i]);
        }
        REQUIRE(hypervolume(nd, ref) == Catch::Approx(base).epsilon(1e-12));

        auto extra = random_set(gen, 1, m).front();
        pts.push_back(extra);
        REQUIRE(hypervolume(pts, ref) >= base - 1e-15);

        // a copy of an existing point pushed slightly back is dominated
        auto worse = pts.front();
        for (auto& v : worse) {
            v = std::min(v + 1e-3, 1.0);
        }
        auto with_worse = pts;
        with_worse.push_back(worse);
        REQUIRE(hypervolume(with_worse, ref) == Catch::Approx(hypervolume(pts, ref)).epsilon(1e-12));
    }
}

TEST_CASE("reference points per problem", "[metrics]")
{
    CHECK(default_reference_point("ZDT1", 2).coordinates == std::vector<double> { 11.0, 11.0 });
    CHECK(default_reference_point("DTLZ2", 3).coordinates == std::vector<double> { 11.0, 11.0, 11.0 });
    CHECK(default_reference_point("SCHAFFER", 2).coordinates == std::vector<double> { 5.0, 5.0 });
    CHECK(default_reference_point("FONSECA", 2).coordinates == std::vector<double> { 1.0, 1.0 });
}

TEST_CASE("igd examples", "[metrics]")
{
    auto const front = true_front_samples("ZDT1", 100).points;
    CHECK(igd(front, front) == 0.0);
    std::vector<std::vector<double>> const origin { { 0.0, 0.0 } };
    std::vector<std::vector<double>> const p { { 3.0, 4.0 } };
    CHECK(igd(p, origin) == 5.0);
    auto const single = true_front_samples("SCHAFFER", 1).points;
    CHECK(igd(single, single) == 0.0);
    CHECK_THROWS_AS(igd(std::vector<std::vector<double>> {}, origin), DomainError);
    CHECK_THROWS_AS(igd(p, std::vector<std::vector<double>> {}), DomainError);
}

TEST_CASE("igd matches brute force and grows when points move away", "[metrics]")
{
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int t = 0; t < 200; ++t) {
        std::size_t const m = 2 + t % 2;
        auto const ref = random_set(gen, 1 + t % 30, m);
        auto approx = random_set(gen, 1 + t % 15, m);
        double const before = igd(approx, ref);
        REQUIRE(before == Catch::Approx(oracle::brute_igd(approx, ref)).epsilon(1e-12));
        // shifting every approximation point further out on every axis moves it
        // away from all reference points, which live in the unit cube
        for (auto& a : approx) {
            for (auto& v : a) {
                v = std::max(v, 1.0) + u(gen);
            }
        }
        double const mid = igd(approx, ref);
        for (auto& a : approx) {
            for (auto& v : a) {
                v += u(gen);
            }
        }
        REQUIRE(igd(approx, ref) >= mid);
    }
}
