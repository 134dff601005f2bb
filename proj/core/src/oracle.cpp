#include "coplan/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace coplan {

ReachabilityTable::ReachabilityTable(int vertex_count, int horizon)
    : vertex_count_(vertex_count),
      horizon_(horizon),
      reachable_(static_cast<size_t>(vertex_count) * (horizon + 1), 0),
      trace_(static_cast<size_t>(vertex_count) * (horizon + 1)),
      has_trace_(static_cast<size_t>(vertex_count) * (horizon + 1), 0) {}

std::optional<int> ReachabilityTable::EarliestArrival(VertexId v) const {
  for (int t = 0; t <= horizon_; ++t) {
    if (reachable_[Index(v, t)]) return t;
  }
  return std::nullopt;
}

std::optional<ReachabilityTable::Transition> ReachabilityTable::Predecessor(
    VertexId v, int t) const {
  if (!has_trace_[Index(v, t)]) return std::nullopt;
  return trace_[Index(v, t)];
}

ExecutionPath ReachabilityTable::WitnessPath(VertexId v, int t) const {
  if (!reachable(v, t)) {
    throw std::logic_error("WitnessPath: pair is not reachable");
  }
  std::vector<ExecutionStep> reversed;
  reversed.push_back({v, t, 0, Mode::kAutonomous});
  VertexId cur_v = v;
  int cur_t = t;
  while (has_trace_[Index(cur_v, cur_t)]) {
    const Transition& tr = trace_[Index(cur_v, cur_t)];
    reversed.push_back({tr.from_vertex, tr.from_time, tr.wait, tr.mode});
    cur_v = tr.from_vertex;
    cur_t = tr.from_time;
  }
  std::reverse(reversed.begin(), reversed.end());
  return ExecutionPath{std::move(reversed)};
}

ReachabilityTable BruteForceReachability(const TemporalGraph& graph,
                                         const AvailabilitySchedule& schedule,
                                         VertexId source, int horizon,
                                         int source_time) {
  assert(horizon >= 0);
  assert(source_time >= 0);
  ReachabilityTable table(graph.vertex_count(), horizon);
  if (source_time > horizon) return table;
  table.reachable_[table.Index(source, source_time)] = 1;

  for (int t = source_time; t <= horizon; ++t) {
    for (VertexId x = 0; x < graph.vertex_count(); ++x) {
      if (!table.reachable_[table.Index(x, t)]) continue;
      const int max_wait = graph.wait_limit(x);
      for (int edge_index : graph.OutEdges(x)) {
        const Edge& e = graph.edges()[edge_index];
        for (int w = 0; w <= max_wait; ++w) {
          const int departure = t + w;
          const int auto_arrival = departure + e.tau_auto;
          if (auto_arrival <= horizon) {
            const size_t idx = table.Index(e.to, auto_arrival);
            if (!table.reachable_[idx]) {
              table.reachable_[idx] = 1;
              table.trace_[idx] = {x, t, w, Mode::kAutonomous};
              table.has_trace_[idx] = 1;
            }
          }
          const int assisted_arrival = departure + e.tau_assisted;
          if (assisted_arrival <= horizon &&
              schedule.IsAvailable(departure, assisted_arrival)) {
            const size_t idx = table.Index(e.to, assisted_arrival);
            if (!table.reachable_[idx]) {
              table.reachable_[idx] = 1;
              table.trace_[idx] = {x, t, w, Mode::kAssisted};
              table.has_trace_[idx] = 1;
            }
          }
        }
      }
    }
  }
  return table;
}

ReachabilityTable BruteForceReachability(const ProblemInstance& instance,
                                         int horizon) {
  return BruteForceReachability(instance.graph, instance.schedule,
                                instance.start, horizon, 0);
}

}  // namespace coplan
