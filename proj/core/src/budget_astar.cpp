#include "coplan/budget_astar.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <stdexcept>

namespace coplan {

namespace {

uint64_t PairKey(VertexId vertex, int arrival) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(vertex)) << 32) |
         static_cast<uint32_t>(arrival);
}

// Reverse Dijkstra from the goal over assisted durations.
std::vector<int> AssistedDistancesToGoal(const TemporalGraph& graph,
                                         VertexId goal) {
  std::vector<std::vector<std::pair<VertexId, int>>> reverse(
      graph.vertex_count());
  for (const Edge& e : graph.edges()) {
    reverse[e.to].emplace_back(e.from, e.tau_assisted);
  }
  std::vector<int> dist(graph.vertex_count(), kInfTime);
  dist[goal] = 0;
  using Item = std::pair<int, VertexId>;  // (distance, vertex)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.push({0, goal});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (auto [u, w] : reverse[v]) {
      if (d + w < dist[u]) {
        dist[u] = d + w;
        heap.push({dist[u], u});
      }
    }
  }
  return dist;
}

// BFS over out-edges; mode does not affect connectivity.
bool StaticallyReachable(const TemporalGraph& graph, VertexId from,
                         VertexId to) {
  std::vector<char> seen(graph.vertex_count(), 0);
  std::vector<VertexId> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (int edge_index : graph.OutEdges(v)) {
      VertexId next = graph.edges()[edge_index].to;
      if (!seen[next]) {
        seen[next] = 1;
        stack.push_back(next);
      }
    }
  }
  return false;
}

// Per-vertex containment-free interval store for processed nodes, queried by
// the extraction fast path. Stores the full triples alongside.
class ProcessedSet {
 public:
  explicit ProcessedSet(int vertex_count) : dominant_(vertex_count) {}

  bool Covers(const SearchNode& node) const {
    const auto& m = dominant_[node.vertex];
    auto it = m.upper_bound(node.arrival);
    if (it == m.begin()) return false;
    --it;
    return it->first + it->second >= node.arrival + node.budget;
  }

  void Add(const SearchNode& node) {
    triples_.push_back(node);
    auto& m = dominant_[node.vertex];
    if (Covers(node)) return;
    const int node_end = node.arrival + node.budget;
    for (auto it = m.lower_bound(node.arrival);
         it != m.end() && it->first + it->second <= node_end;) {
      it = m.erase(it);
    }
    m[node.arrival] = node.budget;
  }

  const std::vector<SearchNode>& triples() const { return triples_; }

 private:
  std::vector<std::map<int, int>> dominant_;  // arrival -> budget
  std::vector<SearchNode> triples_;
};

class Timer {
 public:
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace

std::vector<int> ComputeHeuristic(const TemporalGraph& graph, VertexId goal) {
  assert(graph.IsValidVertex(goal));
  return AssistedDistancesToGoal(graph, goal);
}

std::vector<Candidate> Explore(const SearchNode& node, int wait_limit,
                               const Edge& edge,
                               const AvailabilitySchedule& schedule) {
  assert(edge.from == node.vertex);
  const int alpha = edge.tau_auto;
  const int beta = edge.tau_assisted;

  std::vector<Candidate> candidates;
  candidates.push_back(
      {edge.to, node.arrival + alpha, node.budget + wait_limit,
       Mode::kAutonomous});

  // Departures later than arrival + (alpha - beta) only produce assisted
  // arrivals already covered by the autonomous candidate.
  const int t_max = std::min(alpha - beta, node.budget + wait_limit);
  for (const TimeInterval& run :
       schedule.FeasibleRuns(node.arrival, node.arrival + t_max, beta)) {
    candidates.push_back(
        {edge.to, run.start + beta, run.Length() - 1, Mode::kAssisted});
  }
  return candidates;
}

bool BudgetQueue::Insert(const SearchNode& node) {
  auto& m = by_vertex_[node.vertex];
  const int node_end = node.arrival + node.budget;

  // A queued node covering the new range makes it redundant. With ends
  // strictly increasing, the candidate with the largest arrival <= ours is
  // the only one that can cover.
  auto it = m.upper_bound(node.arrival);
  if (it != m.begin()) {
    auto prev = std::prev(it);
    if (prev->first + prev->second.budget >= node_end) return false;
  }

  // Evict queued nodes the new range covers: a prefix of the entries at or
  // after our arrival.
  for (auto jt = m.lower_bound(node.arrival);
       jt != m.end() && jt->first + jt->second.budget <= node_end;) {
    alive_[jt->second.id] = 0;
    --alive_count_;
    jt = m.erase(jt);
  }

  const uint32_t id = static_cast<uint32_t>(alive_.size());
  alive_.push_back(1);
  ++alive_count_;
  m[node.arrival] = {node.budget, id};
  heap_.push({PriorityOf(node), node.arrival, node.budget, node.vertex, id});
  return true;
}

std::optional<SearchNode> BudgetQueue::ExtractMin() {
  while (!heap_.empty()) {
    HeapEntry top = heap_.top();
    heap_.pop();
    if (!alive_[top.id]) continue;
    alive_[top.id] = 0;
    --alive_count_;
    by_vertex_[top.vertex].erase(top.arrival);
    return SearchNode{top.vertex, top.arrival, top.budget};
  }
  return std::nullopt;
}

std::vector<SearchNode> BudgetQueue::AliveNodes(VertexId vertex) const {
  std::vector<SearchNode> nodes;
  auto it = by_vertex_.find(vertex);
  if (it == by_vertex_.end()) return nodes;
  for (const auto& [arrival, slot] : it->second) {
    nodes.push_back({vertex, arrival, slot.budget});
  }
  return nodes;
}

void PredecessorMap::Record(const SearchNode& inserted,
                            const SearchNode& predecessor, Mode mode) {
  const uint64_t key = PairKey(inserted.vertex, inserted.arrival);
  auto it = entries_.find(key);
  if (it != entries_.end() && it->second.writer_budget > inserted.budget) {
    return;
  }
  entries_[key] = {{predecessor.vertex, predecessor.arrival, mode},
                   inserted.budget};
}

std::optional<PredecessorMap::Entry> PredecessorMap::Lookup(
    VertexId vertex, int arrival) const {
  auto it = entries_.find(PairKey(vertex, arrival));
  if (it == entries_.end()) return std::nullopt;
  return it->second.entry;
}

bool Refine(BudgetQueue& queue, const SearchNode& new_node,
            const SearchNode& curr_node, Mode mode, PredecessorMap& pred_map) {
  if (!queue.Insert(new_node)) return false;
  pred_map.Record(new_node, curr_node, mode);
  return true;
}

ExecutionPath GetPath(const SearchNode& goal_node, const TemporalGraph& graph,
                      const PredecessorMap& pred_map) {
  std::vector<ExecutionStep> reversed;
  reversed.push_back({goal_node.vertex, goal_node.arrival, 0,
                      Mode::kAutonomous});

  VertexId vertex = goal_node.vertex;
  int arrival = goal_node.arrival;
  int rem = 0;
  while (auto pred = pred_map.Lookup(vertex, arrival)) {
    const Edge* edge = graph.FindEdge(pred->vertex, vertex);
    if (edge == nullptr) {
      throw std::logic_error("GetPath: predecessor chain crosses a non-edge");
    }
    // Departure from the predecessor needed to arrive at `arrival + rem`.
    const int departure = arrival - edge->Duration(pred->mode) + rem;
    const int wait = std::min(departure - pred->arrival,
                              graph.wait_limit(pred->vertex));
    if (wait < 0) {
      throw std::logic_error("GetPath: negative wait in reconstruction");
    }
    rem = departure - pred->arrival - wait;
    reversed.push_back({pred->vertex, pred->arrival + rem, wait, pred->mode});
    vertex = pred->vertex;
    arrival = pred->arrival;
  }
  // An intact chain terminates at the start key (s, 0); no other vertex can
  // carry arrival 0 because durations are strictly positive.
  if (arrival != 0) {
    throw std::logic_error("GetPath: broken predecessor chain");
  }
  if (rem != 0) {
    throw std::logic_error("GetPath: residual delay left at the start vertex");
  }
  std::reverse(reversed.begin(), reversed.end());
  return ExecutionPath{std::move(reversed)};
}

SolveResult BudgetAStarSearch(const ProblemInstance& instance,
                              const SearchOptions& options) {
  const TemporalGraph& graph = instance.graph;
  Timer timer;
  SolveResult result;

  // Alg. 1 only terminates on its own when the goal is extracted; with an
  // unreachable goal inside a cyclic component, autonomous candidates grow
  // arrivals without bound. A static reachability precheck preserves the
  // unreachable-marker contract.
  if (!StaticallyReachable(graph, instance.start, instance.goal)) {
    result.stats.wall_time_ms = timer.ElapsedMs();
    return result;
  }

  std::vector<int> heuristic;
  if (options.use_heuristic) {
    heuristic = ComputeHeuristic(graph, instance.goal);
  }

  BudgetQueue queue{std::span<const int>(heuristic)};
  PredecessorMap pred_map;
  ProcessedSet processed(graph.vertex_count());
  SearchStats& stats = result.stats;

  queue.Insert({instance.start, 0, 0});
  ++stats.nodes_generated;

  std::optional<SearchNode> goal_node;
  while (auto curr = queue.ExtractMin()) {
    ++stats.nodes_explored;
    if (options.processed_fastpath && processed.Covers(*curr)) continue;
    processed.Add(*curr);
    if (curr->vertex == instance.goal) {
      goal_node = curr;
      break;
    }
    for (int edge_index : graph.OutEdges(curr->vertex)) {
      const Edge& edge = graph.edges()[edge_index];
      for (const Candidate& candidate :
           Explore(*curr, graph.wait_limit(curr->vertex), edge,
                   instance.schedule)) {
        const SearchNode new_node{candidate.vertex, candidate.arrival,
                                  candidate.budget};
        if (Refine(queue, new_node, *curr, candidate.mode, pred_map)) {
          ++stats.nodes_generated;
        }
      }
    }
  }

  if (goal_node) {
    result.path = GetPath(*goal_node, graph, pred_map);
    result.arrival = goal_node->arrival;
  }
  stats.wall_time_ms = timer.ElapsedMs();
  return result;
}

SearchTrace TraceBudgetAStar(const ProblemInstance& instance, int arrival_cap,
                             bool use_heuristic) {
  const TemporalGraph& graph = instance.graph;
  std::vector<int> heuristic;
  if (use_heuristic) {
    heuristic = ComputeHeuristic(graph, instance.goal);
  }

  SearchTrace trace;
  trace.first_extraction_arrival.resize(graph.vertex_count());

  BudgetQueue queue{std::span<const int>(heuristic)};
  PredecessorMap pred_map;

  queue.Insert({instance.start, 0, 0});
  trace.inserted_nodes.push_back({instance.start, 0, 0});

  while (auto curr = queue.ExtractMin()) {
    auto& first = trace.first_extraction_arrival[curr->vertex];
    if (!first.has_value()) first = curr->arrival;
    for (int edge_index : graph.OutEdges(curr->vertex)) {
      const Edge& edge = graph.edges()[edge_index];
      for (const Candidate& candidate :
           Explore(*curr, graph.wait_limit(curr->vertex), edge,
                   instance.schedule)) {
        if (candidate.arrival > arrival_cap) continue;
        const SearchNode new_node{candidate.vertex, candidate.arrival,
                                  candidate.budget};
        if (Refine(queue, new_node, *curr, candidate.mode, pred_map)) {
          trace.inserted_nodes.push_back(new_node);
        }
      }
    }
  }
  return trace;
}

}  // namespace coplan
