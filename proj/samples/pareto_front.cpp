// Runs NSGA-II and CEC-NSGAII side by side on a ZDT problem and prints the
// final hypervolume, IGD and the CEC front as "f1 f2" rows.
//   sample_pareto_front [problem] [generations]

#include "ceopt/ceopt.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <string>

int main(int argc, char** argv)
{
    using namespace ceopt;
    std::string const id = argc > 1 ? argv[1] : "ZDT1";
    AlgoConfig cfg;
    cfg.generations = argc > 2 ? std::stoul(argv[2]) : 10;

    auto const problem = make_problem(id);
    auto const ref = default_reference_point(id, problem.num_objectives);
    auto const truth = true_front_samples(id, 1000).points;

    auto const base = run_nsgaii_baseline(problem, cfg);
    auto const cec = run_cec_nsgaii(problem, cfg);
    for (auto const* r : { &base, &cec }) {
        auto const front = first_front(r->population);
        fmt::print("{:10} hv {:10.4f}  igd {:8.4f}  front size {}\n", r == &base ? "nsga2" : "cec_nsga2",
            hypervolume_filtered(front, ref).value, igd(front, truth), front.size());
    }

    auto front = first_front(cec.population);
    std::sort(front.begin(), front.end());
    fmt::print("# f1 f2\n");
    for (auto const& f : front) {
        fmt::print("{:.6f} {:.6f}\n", f[0], f[1]);
    }
}
