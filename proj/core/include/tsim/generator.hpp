#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tsim/bipartite.hpp"
#include "tsim/graph.hpp"

namespace tsim {

// Thin deterministic wrapper so every generator draws from one stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [0, n); n must be positive.
  int below(int n);
  // Uniform integer in [lo, hi] inclusive.
  int range(int lo, int hi);
  // True with probability num/den.
  bool chance(int num, int den);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Random data graph with ids n0..n{nodes-1}; labels drawn from the first
// `labels` entries of the default alphabet; expected degree `avg_degree`.
Graph random_data_graph(Rng& rng, int nodes, int labels, double avg_degree);

// Random connected pattern with up to `lr_siblings` extra same-label
// children per node so LR checks actually trigger.
PatternGraph random_pattern(Rng& rng, int nodes, int labels, int lr_siblings);

// Random connected pattern constructed so that no node ever has two
// same-label children or two same-label parents (triple == dual on these).
PatternGraph random_lr_free_pattern(Rng& rng, int nodes, int labels);

// Random tree-shaped pattern (arborescence from node 0) where a subset of
// edges carry quantifiers p in {2,3}; safe input for the quantifier
// transformation.
PatternGraph random_tree_quantified_pattern(Rng& rng, int nodes, int labels);

// Random bipartite graph for matching tests.
BipartiteGraph random_bipartite(Rng& rng, int max_x, int max_y, int max_edges);

}  // namespace tsim
