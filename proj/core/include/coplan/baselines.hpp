#pragma once

#include <optional>

#include "coplan/budget_astar.hpp"
#include "coplan/temporal_graph.hpp"

namespace coplan {

// Arrival time of the all-autonomous, zero-wait shortest path, or nullopt
// when the goal is statically unreachable. Always an upper bound on the
// optimal arrival, so it bounds the time-expanded state space.
std::optional<int> ComputeHorizon(const ProblemInstance& instance);

// A* over (vertex, time) states up to the horizon. From (v, t) the
// successors are (u, t + w + tau(e, m)) for every out-edge, wait
// w in [0, wait limit], and feasible mode. Optimal; used as the
// reference-quality baseline.
SolveResult TimeExpandedSearch(const ProblemInstance& instance, int horizon,
                               bool use_heuristic = true);

// Static-graph A* that commits each vertex at its first extraction. Edge
// costs are the faster of traversing autonomously right away or waiting
// (within the limit) for the operator; autonomous wins ties. Feasible but
// possibly suboptimal.
SolveResult GreedyFastestMode(const ProblemInstance& instance,
                              bool use_heuristic = true);

}  // namespace coplan
