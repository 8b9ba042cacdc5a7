#include "tsim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "tsim/error.hpp"

namespace tsim {

namespace {

constexpr std::size_t kMaxIsoPatternNodes = 6;
constexpr std::size_t kMaxRelationPatternNodes = 8;
constexpr std::size_t kMaxDataNodes = 14;
constexpr std::size_t kMaxMatchingEdges = 20;
constexpr int kMaxHallLeft = 10;

void check_instance_guard(const PatternGraph& q, const Graph& g, const char* what,
                          std::size_t max_pattern) {
  if (q.graph().node_count() > max_pattern)
    throw OversizeError(std::string(what) + ": pattern has " +
                        std::to_string(q.graph().node_count()) + " nodes, guard is " +
                        std::to_string(max_pattern));
  if (g.node_count() > kMaxDataNodes)
    throw OversizeError(std::string(what) + ": data graph has " +
                        std::to_string(g.node_count()) + " nodes, guard is " +
                        std::to_string(kMaxDataNodes));
}

struct IsoSearch {
  const Graph& pattern;
  const Graph& data;
  std::vector<NodeId> image;
  std::vector<char> used;
  std::vector<IsoEmbedding> found;

  // Every pattern edge incident to u and an already-assigned node must be
  // mirrored in the data graph.
  bool consistent(NodeId u, NodeId v) const {
    for (NodeId c : pattern.children(u)) {
      if (c <= u && image[c] >= 0 && !data.has_edge(v, image[c])) return false;
    }
    for (NodeId p : pattern.parents(u)) {
      if (p <= u && image[p] >= 0 && !data.has_edge(image[p], v)) return false;
    }
    return true;
  }

  void extend(NodeId u) {
    if (static_cast<std::size_t>(u) == pattern.node_count()) {
      found.push_back(IsoEmbedding{image});
      return;
    }
    for (NodeId v : data.nodes_with_label(pattern.label(u))) {
      if (used[v] || !consistent(u, v)) continue;
      image[u] = v;
      used[v] = 1;
      extend(u + 1);
      image[u] = -1;
      used[v] = 0;
    }
  }
};

}  // namespace

std::vector<IsoEmbedding> enumerate_isomorphisms(const PatternGraph& q,
                                                 const Graph& g) {
  if (q.is_quantified())
    throw UnsupportedError("isomorphism enumeration requires a plain pattern");
  check_instance_guard(q, g, "enumerate_isomorphisms", kMaxIsoPatternNodes);
  IsoSearch search{q.graph(), g,
                   std::vector<NodeId>(q.graph().node_count(), -1),
                   std::vector<char>(g.node_count(), 0),
                   {}};
  if (q.graph().node_count() > 0) search.extend(0);
  return std::move(search.found);
}

namespace {

// Injective witness search: slot i must be filled by a distinct direction-d
// neighbor of v that is still alive for slots[i].
struct WitnessSearch {
  const Graph& data;
  const std::vector<std::vector<char>>& alive;  // [pattern u][data v]
  const std::vector<NodeId>& slots;
  const std::vector<NodeId>& pool;  // neighbors of v on the checked side
  std::vector<char> used;

  bool fill(std::size_t i) {
    if (i == slots.size()) return true;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (used[k] || !alive[slots[i]][pool[k]]) continue;
      used[k] = 1;
      if (fill(i + 1)) return true;
      used[k] = 0;
    }
    return false;
  }
};

bool witnesses_exist(const Graph& g, const std::vector<std::vector<char>>& alive,
                     const std::vector<NodeId>& slots, const std::vector<NodeId>& pool) {
  if (slots.empty()) return true;
  if (pool.size() < slots.size()) return false;
  WitnessSearch search{g, alive, slots, pool, std::vector<char>(pool.size(), 0)};
  return search.fill(0);
}

}  // namespace

std::optional<SimRelation> brute_force_triple_relation(const PatternGraph& q,
                                                       const Graph& g) {
  check_instance_guard(q, g, "brute_force_triple_relation", kMaxRelationPatternNodes);
  const Graph& pattern = q.graph();
  const std::size_t n = pattern.node_count();

  std::vector<std::vector<char>> alive(n, std::vector<char>(g.node_count(), 0));
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u)
    for (NodeId v : g.nodes_with_label(pattern.label(u))) alive[u][v] = 1;

  // Child slots: one per plain child edge, p per quantified child edge.
  std::vector<std::vector<NodeId>> child_slots(n), parent_slots(n);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (NodeId c : pattern.children(u)) {
      int p = q.quantifier(u, c);
      for (int i = 0; i < p; ++i) child_slots[u].push_back(c);
    }
    for (NodeId w : pattern.parents(u)) parent_slots[u].push_back(w);
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
      for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v) {
        if (!alive[u][v]) continue;
        if (!witnesses_exist(g, alive, child_slots[u], g.children(v)) ||
            !witnesses_exist(g, alive, parent_slots[u], g.parents(v))) {
          alive[u][v] = 0;
          changed = true;
        }
      }
    }
  }

  SimRelation sim(n);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
      if (alive[u][v]) sim.at(u).insert(v);
    if (sim.at(u).empty()) return std::nullopt;
  }
  return sim;
}

int brute_force_matching_size(const BipartiteGraph& bg) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < bg.left_count(); ++x)
    for (int y : bg.adjacent(x)) edges.emplace_back(x, y);
  if (edges.size() > kMaxMatchingEdges)
    throw OversizeError("brute_force_matching_size: " + std::to_string(edges.size()) +
                        " edges, guard is " + std::to_string(kMaxMatchingEdges));

  // Compress endpoint indices so bitmasks stay within 64 bits regardless of
  // how many isolated nodes the graph holds.
  std::unordered_map<int, int> left_slot, right_slot;
  for (auto& [x, y] : edges) {
    x = left_slot.emplace(x, static_cast<int>(left_slot.size())).first->second;
    y = right_slot.emplace(y, static_cast<int>(right_slot.size())).first->second;
  }

  int best = 0;
  // Take-or-skip over the edge list; bitmasks keep endpoints disjoint.
  auto recurse = [&](auto&& self, std::size_t i, std::uint64_t left_mask,
                     std::uint64_t right_mask, int count) -> void {
    best = std::max(best, count);
    if (i == edges.size() || count + static_cast<int>(edges.size() - i) <= best)
      return;
    self(self, i + 1, left_mask, right_mask, count);
    auto [x, y] = edges[i];
    if (!(left_mask >> x & 1) && !(right_mask >> y & 1))
      self(self, i + 1, left_mask | (1ULL << x), right_mask | (1ULL << y), count + 1);
  };
  recurse(recurse, 0, 0, 0, 0);
  return best;
}

bool hall_condition(const BipartiteGraph& bg) {
  if (bg.left_count() > kMaxHallLeft)
    throw OversizeError("hall_condition: " + std::to_string(bg.left_count()) +
                        " left nodes, guard is " + std::to_string(kMaxHallLeft));
  std::vector<char> seen(bg.right_count(), 0);
  for (std::uint32_t subset = 1; subset < (1u << bg.left_count()); ++subset) {
    std::fill(seen.begin(), seen.end(), 0);
    int neighbors = 0;
    for (int x = 0; x < bg.left_count(); ++x) {
      if (!(subset >> x & 1)) continue;
      for (int y : bg.adjacent(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          ++neighbors;
        }
      }
    }
    if (neighbors < std::popcount(subset)) return false;
  }
  return true;
}

}  // namespace tsim
