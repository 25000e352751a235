#ifndef CEOPT_BENCHMARKS_PROBLEM_HPP
#define CEOPT_BENCHMARKS_PROBLEM_HPP

#include "ceopt/benchmarks/composite.hpp"
#include "ceopt/benchmarks/multi.hpp"
#include "ceopt/benchmarks/single.hpp"
#include "ceopt/core.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ceopt {

enum class ProblemKind { single_multimodal, multi_objective };

// Single-objective problems are maximized, multi-objective problems minimized.
struct Problem {
    std::string id;
    std::string name;
    std::size_t dimension = 0;
    Bounds bounds;
    ProblemKind kind = ProblemKind::single_multimodal;
    std::size_t num_objectives = 1;
    std::function<double(std::span<double const>)> scalar;
    std::function<void(std::span<double const>, std::span<double>)> vector;

    [[nodiscard]] bool is_single() const noexcept { return kind == ProblemKind::single_multimodal; }
};

inline void check_domain(Problem const& problem, std::span<double const> x)
{
    if (x.size() != problem.dimension) {
        throw DimensionError(problem.id + ": expected dimension " + std::to_string(problem.dimension) + ", got "
            + std::to_string(x.size()));
    }
    if (!problem.bounds.contains(x)) {
        throw DomainError(problem.id + ": input outside bounds");
    }
}

inline double evaluate(Problem const& problem, std::span<double const> x, EvaluationCounter& counter)
{
    if (!problem.is_single()) {
        throw StateError(problem.id + ": evaluate() called on a multi-objective problem");
    }
    check_domain(problem, x);
    counter.tick();
    return problem.scalar(x);
}

inline std::vector<double> evaluate_mo(Problem const& problem, std::span<double const> x, EvaluationCounter& counter)
{
    if (problem.is_single()) {
        throw StateError(problem.id + ": evaluate_mo() called on a single-objective problem");
    }
    check_domain(problem, x);
    counter.tick();
    std::vector<double> f(problem.num_objectives);
    problem.vector(x, f);
    return f;
}

// Evaluates in place and stamps the counter value.
inline void evaluate_individual(Problem const& problem, Individual& ind, EvaluationCounter& counter)
{
    if (problem.is_single()) {
        ind.fitness = evaluate(problem, ind.genome, counter);
        ind.objectives.reset();
    } else {
        ind.objectives = evaluate_mo(problem, ind.genome, counter);
        ind.fitness.reset();
    }
    ind.eval_id = counter.count();
}

inline constexpr std::size_t default_mo_dimension = 30;

namespace detail {

    inline Problem make_single(std::string id, std::string name, Bounds bounds,
        std::function<double(std::span<double const>)> f)
    {
        Problem p;
        p.id = std::move(id);
        p.name = std::move(name);
        p.dimension = bounds.dimension();
        p.bounds = std::move(bounds);
        p.kind = ProblemKind::single_multimodal;
        p.num_objectives = 1;
        p.scalar = std::move(f);
        return p;
    }

    inline Problem make_multi(std::string id, std::string name, Bounds bounds, std::size_t m,
        std::function<void(std::span<double const>, std::span<double>)> f)
    {
        Problem p;
        p.id = std::move(id);
        p.name = std::move(name);
        p.dimension = bounds.dimension();
        p.bounds = std::move(bounds);
        p.kind = ProblemKind::multi_objective;
        p.num_objectives = m;
        p.vector = std::move(f);
        return p;
    }

    inline Problem make_composite(std::string id, int cf, std::size_t dim)
    {
        auto fn = std::make_shared<composite::Function const>(cf, dim);
        return make_single(std::move(id), "Composition function " + std::to_string(cf),
            Bounds::uniform(dim, -5.0, 5.0), [fn](std::span<double const> x) { return (*fn)(x); });
    }

} // namespace detail

inline std::vector<std::string> single_problem_ids()
{
    std::vector<std::string> ids;
    for (int i = 1; i <= 20; ++i) {
        ids.push_back("F" + std::to_string(i));
    }
    return ids;
}

inline std::vector<std::string> multi_problem_ids()
{
    return { "ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6", "DTLZ1", "DTLZ2", "DTLZ3", "DTLZ4", "DTLZ5", "DTLZ6", "SCHAFFER",
        "FONSECA" };
}

// `dimension` only applies to ZDT/DTLZ problems (default 30).
inline Problem make_problem(std::string const& id, std::optional<std::size_t> dimension = std::nullopt)
{
    using namespace detail;
    if (id == "F1") {
        return make_single(id, "Five-Uneven-Peak Trap", Bounds::uniform(1, 0.0, 30.0), single::five_uneven_peak_trap);
    }
    if (id == "F2") {
        return make_single(id, "Equal Maxima", Bounds::uniform(1, 0.0, 1.0), single::equal_maxima);
    }
    if (id == "F3") {
        return make_single(id, "Uneven Decreasing Maxima", Bounds::uniform(1, 0.0, 1.0), single::uneven_decreasing_maxima);
    }
    if (id == "F4") {
        return make_single(id, "Himmelblau", Bounds::uniform(2, -6.0, 6.0), single::himmelblau);
    }
    if (id == "F5") {
        return make_single(id, "Six-Hump Camel Back", Bounds({ -1.9, -1.1 }, { 1.9, 1.1 }), single::six_hump_camel_back);
    }
    if (id == "F6") {
        return make_single(id, "Shubert 2D", Bounds::uniform(2, -10.0, 10.0), single::shubert);
    }
    if (id == "F7") {
        return make_single(id, "Vincent 2D", Bounds::uniform(2, 0.25, 10.0), single::vincent);
    }
    if (id == "F8") {
        return make_single(id, "Shubert 3D", Bounds::uniform(3, -10.0, 10.0), single::shubert);
    }
    if (id == "F9") {
        return make_single(id, "Vincent 3D", Bounds::uniform(3, 0.25, 10.0), single::vincent);
    }
    if (id == "F10") {
        return make_single(id, "Modified Rastrigin", Bounds::uniform(2, 0.0, 1.0), single::modified_rastrigin);
    }
    struct CompositeRow {
        char const* id;
        int cf;
        std::size_t dim;
    };
    static constexpr CompositeRow composites[] = { { "F11", 1, 2 }, { "F12", 2, 2 }, { "F13", 3, 2 },
        { "F14", 3, 3 }, { "F15", 4, 3 }, { "F16", 3, 5 }, { "F17", 4, 5 }, { "F18", 3, 10 }, { "F19", 4, 10 },
        { "F20", 4, 20 } };
    for (auto const& row : composites) {
        if (id == row.id) {
            return make_composite(id, row.cf, row.dim);
        }
    }

    std::size_t const dim = dimension.value_or(default_mo_dimension);
    auto unit = [](std::size_t d) { return Bounds::uniform(d, 0.0, 1.0); };
    if (id == "ZDT1") {
        return make_multi(id, "ZDT1", unit(dim), 2, multi::zdt1);
    }
    if (id == "ZDT2") {
        return make_multi(id, "ZDT2", unit(dim), 2, multi::zdt2);
    }
    if (id == "ZDT3") {
        return make_multi(id, "ZDT3", unit(dim), 2, multi::zdt3);
    }
    if (id == "ZDT4") {
        std::vector<double> lo(dim, -5.0);
        std::vector<double> hi(dim, 5.0);
        lo[0] = 0.0;
        hi[0] = 1.0;
        return make_multi(id, "ZDT4", Bounds(lo, hi), 2, multi::zdt4);
    }
    if (id == "ZDT6") {
        return make_multi(id, "ZDT6", unit(dim), 2, multi::zdt6);
    }
    if (id.rfind("DTLZ", 0) == 0) {
        if (dim < 3) {
            throw DimensionError(id + ": needs at least 3 variables");
        }
        using Fn = void (*)(std::span<double const>, std::span<double>);
        static constexpr Fn fns[] = { multi::dtlz1, multi::dtlz2, multi::dtlz3, multi::dtlz4, multi::dtlz5,
            multi::dtlz6 };
        for (int k = 1; k <= 6; ++k) {
            if (id == "DTLZ" + std::to_string(k)) {
                return make_multi(id, id, unit(dim), 3, fns[k - 1]);
            }
        }
    }
    if (id == "SCHAFFER") {
        return make_multi(id, "Schaffer N.1", Bounds::uniform(1, -10.0, 10.0), 2, multi::schaffer);
    }
    if (id == "FONSECA") {
        return make_multi(id, "Fonseca-Fleming", Bounds::uniform(2, -4.0, 4.0), 2, multi::fonseca_fleming);
    }
    throw LookupError("unknown problem id: " + id);
}

} // namespace ceopt

#endif
