#include "coplan/temporal_graph.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "fmt_compat.hpp"

namespace coplan {

namespace {

uint64_t EdgeKey(VertexId from, VertexId to) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(from)) << 32) |
         static_cast<uint32_t>(to);
}

}  // namespace

const char* ModeName(Mode mode) {
  return mode == Mode::kAssisted ? "assisted" : "autonomous";
}

AvailabilitySchedule::AvailabilitySchedule(std::vector<TimeInterval> intervals,
                                           int horizon)
    : intervals_(std::move(intervals)), horizon_(horizon) {
  if (horizon_ < 0) {
    throw std::invalid_argument("availability horizon must be >= 0");
  }
  for (size_t i = 0; i < intervals_.size(); ++i) {
    const TimeInterval& iv = intervals_[i];
    if (iv.start > iv.end) {
      throw std::invalid_argument(
          StrFormat("availability[%zu]: start %d > end %d", i, iv.start, iv.end));
    }
    if (iv.start < 0 || iv.end > horizon_) {
      throw std::invalid_argument(StrFormat(
          "availability[%zu]: [%d, %d] outside [0, %d]", i, iv.start, iv.end,
          horizon_));
    }
    if (i > 0 && intervals_[i - 1].end + 1 >= iv.start) {
      throw std::invalid_argument(StrFormat(
          "availability[%zu]: [%d, %d] overlaps or touches availability[%zu]",
          i, iv.start, iv.end, i - 1));
    }
  }
}

bool AvailabilitySchedule::IsAvailable(int t1, int t2) const {
  assert(0 <= t1 && t1 <= t2);
  // Find the last interval starting at or before t1.
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), t1,
      [](int t, const TimeInterval& iv) { return t < iv.start; });
  if (it == intervals_.begin()) return false;
  return std::prev(it)->end >= t2;
}

std::vector<TimeInterval> AvailabilitySchedule::FeasibleRuns(int window_start,
                                                             int window_end,
                                                             int beta) const {
  assert(window_start <= window_end);
  assert(beta >= 1);
  std::vector<TimeInterval> runs;
  // First interval that could still cover window_start.
  auto it = std::upper_bound(
      intervals_.begin(), intervals_.end(), window_start,
      [](int t, const TimeInterval& iv) { return t < iv.start; });
  if (it != intervals_.begin()) --it;
  for (; it != intervals_.end() && it->start <= window_end; ++it) {
    int lo = std::max(it->start, window_start);
    int hi = std::min(it->end - beta, window_end);
    if (lo <= hi) runs.push_back({lo, hi});
  }
  return runs;
}

std::vector<int> AvailabilitySchedule::FeasibleDepartures(int window_start,
                                                          int window_end,
                                                          int beta) const {
  std::vector<int> departures;
  for (const TimeInterval& run : FeasibleRuns(window_start, window_end, beta)) {
    for (int t = run.start; t <= run.end; ++t) departures.push_back(t);
  }
  return departures;
}

TemporalGraph::TemporalGraph(int vertex_count, std::vector<Edge> edges,
                             std::vector<int> wait_limits)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      wait_limits_(std::move(wait_limits)) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("vertex count must be >= 1");
  }
  if (static_cast<int>(wait_limits_.size()) != vertex_count_) {
    throw std::invalid_argument(
        StrFormat("wait_limits has %zu entries for %d vertices",
                  wait_limits_.size(), vertex_count_));
  }
  for (int v = 0; v < vertex_count_; ++v) {
    if (wait_limits_[v] < 0) {
      throw std::invalid_argument(
          StrFormat("wait_limits[%d] is negative", v));
    }
  }
  adjacency_.resize(vertex_count_);
  for (size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (!IsValidVertex(e.from) || !IsValidVertex(e.to)) {
      throw std::invalid_argument(
          StrFormat("edges[%zu]: endpoint out of range", i));
    }
    if (e.from == e.to) {
      throw std::invalid_argument(
          StrFormat("edges[%zu]: self loop at vertex %d", i, e.from));
    }
    if (e.tau_assisted < 1 || e.tau_auto < e.tau_assisted) {
      throw std::invalid_argument(StrFormat(
          "edges[%zu]: need tau_auto >= tau_assisted >= 1, got (%d, %d)", i,
          e.tau_auto, e.tau_assisted));
    }
    auto [unused, inserted] =
        edge_index_.emplace(EdgeKey(e.from, e.to), static_cast<int>(i));
    if (!inserted) {
      throw std::invalid_argument(StrFormat(
          "edges[%zu]: duplicate edge %d -> %d", i, e.from, e.to));
    }
    adjacency_[e.from].push_back(static_cast<int>(i));
  }
}

std::span<const int> TemporalGraph::OutEdges(VertexId v) const {
  return adjacency_[v];
}

const Edge* TemporalGraph::FindEdge(VertexId from, VertexId to) const {
  auto it = edge_index_.find(EdgeKey(from, to));
  return it == edge_index_.end() ? nullptr : &edges_[it->second];
}

ProblemInstance MakeProblemInstance(TemporalGraph graph,
                                    AvailabilitySchedule schedule,
                                    VertexId start, VertexId goal) {
  if (!graph.IsValidVertex(start) || !graph.IsValidVertex(goal)) {
    throw std::invalid_argument(
        StrFormat("query (%d, %d): vertex out of range", start, goal));
  }
  if (start == goal) {
    throw std::invalid_argument(
        StrFormat("query (%d, %d): start equals goal", start, goal));
  }
  return ProblemInstance{std::move(graph), std::move(schedule), start, goal};
}

ValidationReport ValidatePath(const ProblemInstance& instance,
                              const ExecutionPath& path) {
  const TemporalGraph& graph = instance.graph;
  ValidationReport report;
  auto add = [&report](int constraint, int step, std::string message) {
    report.violations.push_back({constraint, step, std::move(message)});
  };

  if (path.steps.empty()) {
    add(kStructural, 0, "path is empty");
    return report;
  }

  std::vector<bool> structural_ok(path.steps.size(), true);
  for (size_t i = 0; i < path.steps.size(); ++i) {
    const ExecutionStep& step = path.steps[i];
    if (!graph.IsValidVertex(step.vertex)) {
      add(kStructural, static_cast<int>(i),
          StrFormat("unknown vertex id %d", step.vertex));
      structural_ok[i] = false;
    }
    if (step.arrival < 0 || step.wait < 0) {
      add(kStructural, static_cast<int>(i), "negative arrival or wait");
      structural_ok[i] = false;
    }
  }

  // Constraint 1: endpoints.
  if (structural_ok.front() && path.steps.front().vertex != instance.start) {
    add(kEndpoints, 0,
        StrFormat("path starts at %d, expected start vertex %d",
                  path.steps.front().vertex, instance.start));
  }
  if (structural_ok.back() && path.steps.back().vertex != instance.goal) {
    add(kEndpoints, static_cast<int>(path.steps.size()) - 1,
        StrFormat("path ends at %d, expected goal vertex %d",
                  path.steps.back().vertex, instance.goal));
  }

  for (size_t i = 0; i + 1 < path.steps.size(); ++i) {
    if (!structural_ok[i] || !structural_ok[i + 1]) continue;
    const ExecutionStep& step = path.steps[i];
    const ExecutionStep& next = path.steps[i + 1];
    const int index = static_cast<int>(i);

    // Constraint 2: consecutive vertices connected by an edge.
    const Edge* edge = graph.FindEdge(step.vertex, next.vertex);
    if (edge == nullptr) {
      add(kEdgeExists, index,
          StrFormat("no edge %d -> %d", step.vertex, next.vertex));
      continue;
    }

    // Constraint 3: arrival arithmetic.
    const int departure = step.arrival + step.wait;
    const int expected_arrival = departure + edge->Duration(step.mode);
    if (next.arrival != expected_arrival) {
      add(kArrivalArithmetic, index,
          StrFormat("arrival at step %d is %d, expected %d", index + 1,
                    next.arrival, expected_arrival));
    }

    // Constraint 4: waiting limit.
    if (step.wait > graph.wait_limit(step.vertex)) {
      add(kWaitLimit, index,
          StrFormat("wait %d exceeds limit %d at vertex %d", step.wait,
                    graph.wait_limit(step.vertex), step.vertex));
    }

    // Constraint 5: assisted steps need the operator until the next vertex.
    if (step.mode == Mode::kAssisted &&
        !instance.schedule.IsAvailable(departure,
                                       departure + edge->tau_assisted)) {
      add(kAssistedAvailability, index,
          StrFormat("operator unavailable during [%d, %d]", departure,
                    departure + edge->tau_assisted));
    }
  }
  return report;
}

}  // namespace coplan
