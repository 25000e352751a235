#ifndef CEOPT_CEOPT_HPP
#define CEOPT_CEOPT_HPP

#include "ceopt/algorithms/config.hpp"
#include "ceopt/algorithms/multi_objective.hpp"
#include "ceopt/algorithms/single_objective.hpp"
#include "ceopt/benchmarks/composite.hpp"
#include "ceopt/benchmarks/multi.hpp"
#include "ceopt/benchmarks/problem.hpp"
#include "ceopt/benchmarks/registry.hpp"
#include "ceopt/benchmarks/single.hpp"
#include "ceopt/chaotic.hpp"
#include "ceopt/clustering.hpp"
#include "ceopt/core.hpp"
#include "ceopt/localsearch.hpp"
#include "ceopt/metrics.hpp"
#include "ceopt/niching.hpp"
#include "ceopt/pareto.hpp"

#endif
