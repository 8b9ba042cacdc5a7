#include "tsim/bipartite.hpp"

#include <queue>
#include <sstream>

#include "tsim/error.hpp"

namespace tsim {

int BipartiteGraph::add_left(std::string id) {
  left_ids_.push_back(std::move(id));
  adjacency_.emplace_back();
  return left_count() - 1;
}

int BipartiteGraph::ensure_right(const std::string& id) {
  auto it = right_index_.find(id);
  if (it != right_index_.end()) return it->second;
  int y = right_count();
  right_index_.emplace(id, y);
  right_ids_.push_back(id);
  return y;
}

std::optional<int> BipartiteGraph::find_right(const std::string& id) const {
  auto it = right_index_.find(id);
  if (it == right_index_.end()) return std::nullopt;
  return it->second;
}

void BipartiteGraph::check_left(int x) const {
  if (x < 0 || x >= left_count())
    throw InvalidInputError("left index " + std::to_string(x) + " out of range");
}

void BipartiteGraph::check_right(int y) const {
  if (y < 0 || y >= right_count())
    throw InvalidInputError("right index " + std::to_string(y) + " out of range");
}

void BipartiteGraph::add_edge(int left, int right) {
  check_left(left);
  check_right(right);
  std::uint64_t key = (static_cast<std::uint64_t>(left) << 32) |
                      static_cast<std::uint32_t>(right);
  if (!edge_set_.insert(key).second) return;
  adjacency_[left].push_back(right);
}

const std::string& BipartiteGraph::left_id(int x) const {
  check_left(x);
  return left_ids_[x];
}

const std::string& BipartiteGraph::right_id(int y) const {
  check_right(y);
  return right_ids_[y];
}

const std::vector<int>& BipartiteGraph::adjacent(int x) const {
  check_left(x);
  return adjacency_[x];
}

std::string BipartiteGraph::to_dot() const {
  std::ostringstream out;
  out << "graph bipartite {\n  rankdir=LR;\n";
  for (int x = 0; x < left_count(); ++x)
    out << "  \"x" << x << "\" [label=\"" << left_ids_[x] << "\", shape=box];\n";
  for (int y = 0; y < right_count(); ++y)
    out << "  \"y" << y << "\" [label=\"" << right_ids_[y] << "\"];\n";
  for (int x = 0; x < left_count(); ++x)
    for (int y : adjacency_[x]) out << "  \"x" << x << "\" -- \"y" << y << "\";\n";
  out << "}\n";
  return out.str();
}

namespace {

constexpr int kFree = -1;

struct HopcroftKarp {
  const BipartiteGraph& bg;
  std::vector<int> match_left;   // left -> right or kFree
  std::vector<int> match_right;  // right -> left or kFree
  std::vector<int> layer;        // BFS layer per left node
  static constexpr int kUnlayered = -1;

  explicit HopcroftKarp(const BipartiteGraph& b)
      : bg(b),
        match_left(b.left_count(), kFree),
        match_right(b.right_count(), kFree),
        layer(b.left_count(), kUnlayered) {}

  // Layers free left nodes at 0 and grows alternating levels; returns true
  // when some augmenting path exists.
  bool bfs() {
    std::queue<int> frontier;
    for (int x = 0; x < bg.left_count(); ++x) {
      if (match_left[x] == kFree) {
        layer[x] = 0;
        frontier.push(x);
      } else {
        layer[x] = kUnlayered;
      }
    }
    bool reachable = false;
    while (!frontier.empty()) {
      int x = frontier.front();
      frontier.pop();
      for (int y : bg.adjacent(x)) {
        int owner = match_right[y];
        if (owner == kFree) {
          reachable = true;
        } else if (layer[owner] == kUnlayered) {
          layer[owner] = layer[x] + 1;
          frontier.push(owner);
        }
      }
    }
    return reachable;
  }

  // Layered augmenting DFS from left node x.
  bool dfs(int x) {
    for (int y : bg.adjacent(x)) {
      int owner = match_right[y];
      if (owner == kFree || (layer[owner] == layer[x] + 1 && dfs(owner))) {
        match_left[x] = y;
        match_right[y] = x;
        return true;
      }
    }
    layer[x] = kUnlayered;  // dead end for this phase
    return false;
  }

  Matching run(MatchingStats* stats) {
    while (bfs()) {
      if (stats) ++stats->phases;
      for (int x = 0; x < bg.left_count(); ++x) {
        if (match_left[x] == kFree && dfs(x)) {
          if (stats) ++stats->augmenting_paths;
        }
      }
    }
    Matching m;
    for (int x = 0; x < bg.left_count(); ++x)
      if (match_left[x] != kFree) m.pairs.emplace_back(x, match_left[x]);
    return m;
  }
};

}  // namespace

Matching maximum_matching(const BipartiteGraph& bg, MatchingStats* stats) {
  return HopcroftKarp(bg).run(stats);
}

bool has_complete_matching(const BipartiteGraph& bg, MatchingStats* stats) {
  if (bg.right_count() < bg.left_count()) return false;
  return maximum_matching(bg, stats).size() ==
         static_cast<std::size_t>(bg.left_count());
}

}  // namespace tsim
