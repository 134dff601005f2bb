#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <unordered_map>
#include <vector>

#include "coplan/temporal_graph.hpp"

namespace coplan {

// Augmented search state: all arrivals in [arrival, arrival + budget] at
// `vertex` are achievable, where budget is the maximum delay obtainable by
// waiting upstream.
struct SearchNode {
  VertexId vertex = 0;
  int arrival = 0;
  int budget = 0;
  bool operator==(const SearchNode&) const = default;
};

// A node produced by Explore, tagged with the mode used on the edge.
struct Candidate {
  VertexId vertex = 0;
  int arrival = 0;
  int budget = 0;
  Mode mode = Mode::kAutonomous;
  bool operator==(const Candidate&) const = default;
};

struct SearchStats {
  int64_t nodes_generated = 0;  // insertions into the queue
  int64_t nodes_explored = 0;   // extractions before termination
  double wall_time_ms = 0.0;
};

struct SolveResult {
  std::optional<ExecutionPath> path;
  std::optional<int> arrival;
  SearchStats stats;

  bool reachable() const { return arrival.has_value(); }
};

// Lower bound on remaining travel time per vertex: static shortest path to
// the goal where every edge costs its assisted duration, i.e. the problem
// relaxed to an always-available operator. Unreachable vertices map to
// kInfTime.
std::vector<int> ComputeHeuristic(const TemporalGraph& graph, VertexId goal);

// Candidate nodes for one (node, edge) pair: the single autonomous candidate
// (to, arrival + tau_auto, budget + wait_limit) first, then one assisted
// candidate per maximal run of feasible departures in
// [arrival, arrival + min(tau_auto - tau_assisted, budget + wait_limit)].
std::vector<Candidate> Explore(const SearchNode& node, int wait_limit,
                               const Edge& edge,
                               const AvailabilitySchedule& schedule);

// Priority queue over SearchNodes with containment-based refinement. For each
// vertex, the alive nodes' arrival ranges are pairwise containment-free.
// Extraction order: priority (arrival plus heuristic), then arrival, then
// budget descending, then vertex id.
class BudgetQueue {
 public:
  // `heuristic` may be empty (zero heuristic); otherwise one entry per vertex.
  explicit BudgetQueue(std::span<const int> heuristic = {})
      : heuristic_(heuristic) {}

  // Queue-side refinement: returns false (and leaves the queue untouched)
  // when an alive node of the same vertex already covers `node`'s range;
  // otherwise evicts alive nodes whose ranges `node` covers and inserts it.
  bool Insert(const SearchNode& node);

  // Pops the minimum alive node, or nullopt when the queue is exhausted.
  std::optional<SearchNode> ExtractMin();

  bool Empty() const { return alive_count_ == 0; }

  // Alive nodes of one vertex, ascending by arrival (inspection surface).
  std::vector<SearchNode> AliveNodes(VertexId vertex) const;

 private:
  struct HeapEntry {
    int64_t priority = 0;
    int arrival = 0;
    int budget = 0;
    VertexId vertex = 0;
    uint32_t id = 0;
  };
  struct PopsLater {
    bool operator()(const HeapEntry& a, const HeapEntry& b) const {
      if (a.priority != b.priority) return a.priority > b.priority;
      if (a.arrival != b.arrival) return a.arrival > b.arrival;
      if (a.budget != b.budget) return a.budget < b.budget;
      return a.vertex > b.vertex;
    }
  };
  struct Slot {
    int budget = 0;
    uint32_t id = 0;
  };

  int64_t PriorityOf(const SearchNode& node) const {
    const int h = heuristic_.empty() ? 0 : heuristic_[node.vertex];
    return static_cast<int64_t>(node.arrival) + h;
  }

  std::span<const int> heuristic_;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, PopsLater> heap_;
  std::vector<char> alive_;
  // Per vertex: arrival -> slot for alive nodes. Containment-freeness makes
  // range ends strictly increasing with arrival.
  std::unordered_map<VertexId, std::map<int, Slot>> by_vertex_;
  size_t alive_count_ = 0;
};

// Predecessor function: (vertex, arrival) -> (predecessor vertex, predecessor
// arrival, mode). An entry is written when its node is inserted into the
// queue; among nodes sharing a key, the largest-budget writer wins, so a
// recorded entry always supports every delay the path reconstruction can
// push onto that key.
class PredecessorMap {
 public:
  struct Entry {
    VertexId vertex = 0;
    int arrival = 0;
    Mode mode = Mode::kAutonomous;
  };

  void Record(const SearchNode& inserted, const SearchNode& predecessor,
              Mode mode);
  std::optional<Entry> Lookup(VertexId vertex, int arrival) const;

 private:
  struct Stored {
    Entry entry;
    int writer_budget = 0;
  };
  std::unordered_map<uint64_t, Stored> entries_;
};

// Full refinement step: queue-side containment handling plus predecessor
// recording for inserted nodes. Returns whether the node entered the queue.
bool Refine(BudgetQueue& queue, const SearchNode& new_node,
            const SearchNode& curr_node, Mode mode, PredecessorMap& pred_map);

// Backtracks from an extracted goal node through the predecessor map,
// splitting each required departure delay into waiting at the predecessor
// (capped by its limit) and a residual arrival delay pushed further back.
// Throws std::logic_error on a broken predecessor chain.
ExecutionPath GetPath(const SearchNode& goal_node, const TemporalGraph& graph,
                      const PredecessorMap& pred_map);

struct SearchOptions {
  bool use_heuristic = true;
  // Skip expanding an extracted node whose full range is covered by an
  // already-processed node of the same vertex. Off by default; benchmarks
  // turn it on.
  bool processed_fastpath = false;
};

// Optimal earliest-arrival search over (vertex, arrival, budget) nodes.
// Unreachable goals yield a result with no path and zeroed node counts.
SolveResult BudgetAStarSearch(const ProblemInstance& instance,
                              const SearchOptions& options = {});

// Diagnostic run to queue exhaustion (goal never stops the search) with
// candidate arrivals pruned at `arrival_cap`. Records the arrival of the
// first extracted node per vertex and every queue insertion.
struct SearchTrace {
  std::vector<std::optional<int>> first_extraction_arrival;
  std::vector<SearchNode> inserted_nodes;
};

SearchTrace TraceBudgetAStar(const ProblemInstance& instance, int arrival_cap,
                             bool use_heuristic = false);

}  // namespace coplan
