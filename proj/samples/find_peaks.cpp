// Finds the peaks of one benchmark function with CECA and prints them next to
// the known optima.
//   sample_find_peaks [problem] [seed]     e.g. sample_find_peaks F4 7

#include "ceopt/ceopt.hpp"

#include <fmt/format.h>

#include <string>

int main(int argc, char** argv)
{
    using namespace ceopt;
    std::string const id = argc > 1 ? argv[1] : "F4";
    AlgoConfig cfg;
    cfg.population_size = 200;
    cfg.seed = argc > 2 ? std::stoull(argv[2]) : 1;

    auto const problem = make_problem(id);
    auto const reg = known_optima(id);
    auto const res = run_ceca(problem, cfg);

    fmt::print("{} ({}), {} evaluations, {} clusters\n", id, problem.name, res.evaluations, res.peaks.size());
    for (auto const& p : res.peaks) {
        std::string x;
        for (double v : p.genome) {
            x += fmt::format(" {:9.5f}", v);
        }
        fmt::print("  f = {:12.6f} at{}\n", p.fit(), x);
    }
    auto const params = PeakCountParams::from_registry(reg);
    fmt::print("global optima found: {} of {} (eps {}, radius {})\n", count_found_peaks(res.peaks, reg, params),
        reg.count_global, params.accuracy_eps, reg.niche_radius);
}
