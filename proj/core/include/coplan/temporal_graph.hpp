#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace coplan {

using VertexId = int32_t;

// Time sentinel large enough to survive `arrival + heuristic` sums in 64-bit
// priorities without ever colliding with a real instant.
inline constexpr int kInfTime = std::numeric_limits<int>::max() / 4;

enum class Mode : uint8_t {
  kAutonomous = 0,
  kAssisted = 1,
};

const char* ModeName(Mode mode);

// Directed edge with one traversal duration per mode, in integer minutes.
// Invariant: tau_auto >= tau_assisted >= 1, from != to.
struct Edge {
  VertexId from = 0;
  VertexId to = 0;
  int tau_auto = 1;
  int tau_assisted = 1;

  int Duration(Mode mode) const {
    return mode == Mode::kAssisted ? tau_assisted : tau_auto;
  }
  bool operator==(const Edge&) const = default;
};

// Closed integer interval [start, end].
struct TimeInterval {
  int start = 0;
  int end = 0;

  int Length() const { return end - start + 1; }
  bool operator==(const TimeInterval&) const = default;
};

// Operator availability as a sorted list of disjoint, non-adjacent closed
// intervals. Every instant outside the intervals (including everything past
// the horizon) counts as unavailable.
class AvailabilitySchedule {
 public:
  AvailabilitySchedule() = default;
  AvailabilitySchedule(std::vector<TimeInterval> intervals, int horizon);

  // True iff every instant in [t1, t2] falls inside one interval.
  // Requires 0 <= t1 <= t2.
  bool IsAvailable(int t1, int t2) const;

  // All departure instants t in [window_start, window_end] with
  // IsAvailable(t, t + beta), ascending.
  std::vector<int> FeasibleDepartures(int window_start, int window_end,
                                      int beta) const;

  // Same set as FeasibleDepartures, grouped into maximal runs of consecutive
  // instants. Runs from distinct availability intervals never touch because
  // intervals are non-adjacent.
  std::vector<TimeInterval> FeasibleRuns(int window_start, int window_end,
                                         int beta) const;

  const std::vector<TimeInterval>& intervals() const { return intervals_; }
  int horizon() const { return horizon_; }

  bool operator==(const AvailabilitySchedule&) const = default;

 private:
  std::vector<TimeInterval> intervals_;
  int horizon_ = 0;
};

// Immutable directed graph with dual edge durations and per-vertex waiting
// limits. At most one edge per ordered (from, to) pair; no self loops.
class TemporalGraph {
 public:
  TemporalGraph() = default;
  TemporalGraph(int vertex_count, std::vector<Edge> edges,
                std::vector<int> wait_limits);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& wait_limits() const { return wait_limits_; }

  int wait_limit(VertexId v) const { return wait_limits_[v]; }
  bool IsValidVertex(VertexId v) const { return v >= 0 && v < vertex_count_; }

  // Indices into edges() of the out-edges of v.
  std::span<const int> OutEdges(VertexId v) const;

  // The unique edge from -> to, or nullptr.
  const Edge* FindEdge(VertexId from, VertexId to) const;

  bool operator==(const TemporalGraph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_ &&
           wait_limits_ == other.wait_limits_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> wait_limits_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_map<uint64_t, int> edge_index_;
};

struct Query {
  VertexId start = 0;
  VertexId goal = 0;
  bool operator==(const Query&) const = default;
};

// One solvable problem: graph + schedule + a single start/goal query.
struct ProblemInstance {
  TemporalGraph graph;
  AvailabilitySchedule schedule;
  VertexId start = 0;
  VertexId goal = 0;
};

// Validates start/goal against the graph (start != goal, both in range).
ProblemInstance MakeProblemInstance(TemporalGraph graph,
                                    AvailabilitySchedule schedule,
                                    VertexId start, VertexId goal);

// One step of an execution path: arrive at `vertex` at `arrival`, wait
// `wait` minutes, then traverse the outgoing edge under `mode`. The final
// step carries wait = 0 and mode = kAutonomous as sentinels.
struct ExecutionStep {
  VertexId vertex = 0;
  int arrival = 0;
  int wait = 0;
  Mode mode = Mode::kAutonomous;
  bool operator==(const ExecutionStep&) const = default;
};

struct ExecutionPath {
  std::vector<ExecutionStep> steps;
  bool operator==(const ExecutionPath&) const = default;
};

// Constraint identifiers for validation reports, numbered after the problem
// definition; 0 flags structural defects (unknown vertices, negative times).
enum PathConstraint : int {
  kStructural = 0,
  kEndpoints = 1,
  kEdgeExists = 2,
  kArrivalArithmetic = 3,
  kWaitLimit = 4,
  kAssistedAvailability = 5,
};

struct PathViolation {
  int constraint = kStructural;
  int step_index = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<PathViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks, in order: endpoints, edge existence, arrival arithmetic
// t_{i+1} = t_i + w_i + tau(e, m_i), wait limits, and operator availability
// over [t_i + w_i, t_{i+1}] for assisted steps. Reports every violation with
// its step index. Requires a non-empty path.
ValidationReport ValidatePath(const ProblemInstance& instance,
                              const ExecutionPath& path);

}  // namespace coplan
