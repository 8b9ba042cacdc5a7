#ifndef TSIM_BIPARTITE_HPP
#define TSIM_BIPARTITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tsim {

// Bipartite graph between an ordered list of left nodes (X) and right nodes
// (Y). Left and right ids live in separate id spaces, so the same string may
// appear on both sides. Edges are held by index; duplicates are silently
// dropped. Left ids need not be unique (the label-repetition checker adds one
// left column per required witness, and quantified columns are synthesized
// copies).
class BipartiteGraph {
 public:
  int add_left(std::string id);
  // Adds a right node unless the id is already present; returns its index.
  int ensure_right(const std::string& id);
  std::optional<int> find_right(const std::string& id) const;

  void add_edge(int left, int right);

  int left_count() const { return static_cast<int>(left_ids_.size()); }
  int right_count() const { return static_cast<int>(right_ids_.size()); }
  std::size_t edge_count() const { return edge_set_.size(); }

  const std::string& left_id(int x) const;
  const std::string& right_id(int y) const;
  // Right indices adjacent to left x, in first-insertion order.
  const std::vector<int>& adjacent(int x) const;

  // Undirected DOT rendering for debugging.
  std::string to_dot() const;

 private:
  void check_left(int x) const;
  void check_right(int y) const;

  std::vector<std::string> left_ids_;
  std::vector<std::string> right_ids_;
  std::unordered_map<std::string, int> right_index_;
  std::vector<std::vector<int>> adjacency_;
  std::unordered_set<std::uint64_t> edge_set_;
};

struct MatchingStats {
  long augmenting_paths = 0;
  long phases = 0;
};

// A matching as (left, right) index pairs in ascending left order.
struct Matching {
  std::vector<std::pair<int, int>> pairs;
  std::size_t size() const { return pairs.size(); }
};

// Maximum-cardinality matching via Hopcroft-Karp. Fully deterministic: BFS
// layers grow over left nodes in ascending order and the augmenting DFS scans
// adjacency lists in insertion order.
Matching maximum_matching(const BipartiteGraph& bg, MatchingStats* stats = nullptr);

// True when some matching covers every left node. Skips the matching
// computation when |Y| < |X|. An empty left side is covered vacuously.
bool has_complete_matching(const BipartiteGraph& bg, MatchingStats* stats = nullptr);

}  // namespace tsim

#endif
