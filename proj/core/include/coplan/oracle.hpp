#pragma once

#include <optional>
#include <vector>

#include "coplan/temporal_graph.hpp"

namespace coplan {

// Ground-truth table of achievable (vertex, time) pairs up to a horizon,
// computed by forward dynamic programming. Intended for desk-scale
// verification, not benchmarks: O(horizon * |E| * max wait limit).
class ReachabilityTable {
 public:
  struct Transition {
    VertexId from_vertex = 0;
    int from_time = 0;
    int wait = 0;
    Mode mode = Mode::kAutonomous;
  };

  ReachabilityTable(int vertex_count, int horizon);

  bool reachable(VertexId v, int t) const { return reachable_[Index(v, t)]; }
  int horizon() const { return horizon_; }
  int vertex_count() const { return vertex_count_; }

  // Minimum reachable time at v, or nullopt when v is unreachable within the
  // horizon.
  std::optional<int> EarliestArrival(VertexId v) const;

  // First-writer transition into (v, t); nullopt for the source pair.
  std::optional<Transition> Predecessor(VertexId v, int t) const;

  // A feasible execution path arriving at v exactly at time t, rebuilt from
  // the predecessor trace. Requires reachable(v, t).
  ExecutionPath WitnessPath(VertexId v, int t) const;

 private:
  friend ReachabilityTable BruteForceReachability(const TemporalGraph&,
                                                  const AvailabilitySchedule&,
                                                  VertexId, int, int);
  size_t Index(VertexId v, int t) const {
    return static_cast<size_t>(v) * (horizon_ + 1) + t;
  }

  int vertex_count_ = 0;
  int horizon_ = 0;
  std::vector<char> reachable_;
  std::vector<Transition> trace_;
  std::vector<char> has_trace_;
};

// Fixpoint of: (source, source_time) is reachable; from each reachable (x, t),
// every out-edge, wait w in [0, wait limit], and feasible mode reaches
// (y, t + w + tau(e, m)) when that lands at or before the horizon. One sweep
// in increasing t suffices because durations are strictly positive.
ReachabilityTable BruteForceReachability(const TemporalGraph& graph,
                                         const AvailabilitySchedule& schedule,
                                         VertexId source, int horizon,
                                         int source_time = 0);

ReachabilityTable BruteForceReachability(const ProblemInstance& instance,
                                         int horizon);

}  // namespace coplan
