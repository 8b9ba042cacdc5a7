#include "tsim/generator.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "tsim/error.hpp"

namespace tsim {

namespace {

const std::vector<std::string> kAlphabet = {"A", "B", "C", "D",
                                            "E", "F", "G", "H"};

std::string pick_label(Rng& rng, int labels) {
  if (labels < 1 || labels > static_cast<int>(kAlphabet.size()))
    throw InvalidInputError("label alphabet size out of range");
  return kAlphabet[static_cast<std::size_t>(rng.below(labels))];
}

std::string node_name(int i) { return "n" + std::to_string(i); }

}  // namespace

int Rng::below(int n) {
  if (n <= 0) throw InvalidInputError("Rng::below needs a positive bound");
  return static_cast<int>(
      std::uniform_int_distribution<std::uint64_t>(0, n - 1)(engine_));
}

int Rng::range(int lo, int hi) {
  if (hi < lo) throw InvalidInputError("Rng::range needs lo <= hi");
  return lo + below(hi - lo + 1);
}

bool Rng::chance(int num, int den) {
  if (den <= 0 || num < 0) throw InvalidInputError("Rng::chance needs den > 0");
  return below(den) < num;
}

Graph random_data_graph(Rng& rng, int nodes, int labels, double avg_degree) {
  if (nodes < 1) throw InvalidInputError("data graph needs at least one node");
  GraphBuilder builder;
  for (int i = 0; i < nodes; ++i) builder.add_node(node_name(i), pick_label(rng, labels));
  if (nodes == 1) return builder.build();

  int target = static_cast<int>(avg_degree * nodes);
  int max_edges = nodes * (nodes - 1);
  target = std::min(target, max_edges);
  std::set<std::pair<int, int>> used;
  int attempts = 0;
  while (static_cast<int>(used.size()) < target && attempts < 20 * target + 100) {
    ++attempts;
    int src = rng.below(nodes);
    int dst = rng.below(nodes);
    if (src == dst) continue;
    if (!used.emplace(src, dst).second) continue;
    builder.add_edge(node_name(src), node_name(dst));
  }
  return builder.build();
}

PatternGraph random_pattern(Rng& rng, int nodes, int labels, int lr_siblings) {
  if (nodes < 1) throw InvalidInputError("pattern needs at least one node");
  PatternBuilder builder;
  std::vector<std::string> label_of(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) {
    label_of[static_cast<std::size_t>(i)] = pick_label(rng, labels);
    builder.add_node(node_name(i), label_of[static_cast<std::size_t>(i)]);
  }
  // Random spanning structure keeps the pattern connected.
  std::set<std::pair<int, int>> used;
  for (int i = 1; i < nodes; ++i) {
    int other = rng.below(i);
    int src = rng.chance(1, 2) ? other : i;
    int dst = src == other ? i : other;
    used.emplace(src, dst);
    builder.add_edge(node_name(src), node_name(dst));
  }
  // Extra edges biased toward same-label siblings so LR constraints appear.
  int extras = lr_siblings > 0 ? rng.below(lr_siblings + 1) : 0;
  for (int k = 0; k < extras + nodes / 2; ++k) {
    int src = rng.below(nodes);
    int dst = rng.below(nodes);
    if (src == dst) continue;
    if (!used.emplace(src, dst).second) continue;
    builder.add_edge(node_name(src), node_name(dst));
  }
  return builder.build();
}

PatternGraph random_lr_free_pattern(Rng& rng, int nodes, int labels) {
  if (nodes < 1) throw InvalidInputError("pattern needs at least one node");
  // A tree with edges pointing away from the root; labels chosen greedily so
  // siblings never collide (and a node never matches its parent's other
  // children), keeping every neighbourhood free of label repetition.
  std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
  std::vector<std::vector<int>> children(static_cast<std::size_t>(nodes));
  for (int i = 1; i < nodes; ++i) {
    parent[static_cast<std::size_t>(i)] = rng.below(i);
    children[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])].push_back(i);
  }
  std::vector<std::string> label_of(static_cast<std::size_t>(nodes));
  for (int i = 0; i < nodes; ++i) {
    std::set<std::string> taken;
    int p = parent[static_cast<std::size_t>(i)];
    if (p >= 0)
      for (int sibling : children[static_cast<std::size_t>(p)])
        if (sibling < i) taken.insert(label_of[static_cast<std::size_t>(sibling)]);
    std::string label = pick_label(rng, labels);
    for (int tries = 0; taken.count(label) && tries < 32; ++tries)
      label = pick_label(rng, labels);
    if (taken.count(label)) {
      // Alphabet exhausted by siblings; fall back to any unused letter.
      for (const std::string& candidate : kAlphabet)
        if (!taken.count(candidate)) {
          label = candidate;
          break;
        }
    }
    if (taken.count(label))
      throw InvalidInputError("cannot label an LR-free pattern this wide");
    label_of[static_cast<std::size_t>(i)] = label;
  }
  PatternBuilder builder;
  for (int i = 0; i < nodes; ++i)
    builder.add_node(node_name(i), label_of[static_cast<std::size_t>(i)]);
  for (int i = 1; i < nodes; ++i)
    builder.add_edge(node_name(parent[static_cast<std::size_t>(i)]), node_name(i));
  return builder.build();
}

PatternGraph random_tree_quantified_pattern(Rng& rng, int nodes, int labels) {
  if (nodes < 1) throw InvalidInputError("pattern needs at least one node");
  std::vector<int> parent(static_cast<std::size_t>(nodes), -1);
  for (int i = 1; i < nodes; ++i) parent[static_cast<std::size_t>(i)] = rng.below(i);
  PatternBuilder builder;
  for (int i = 0; i < nodes; ++i) builder.add_node(node_name(i), pick_label(rng, labels));
  for (int i = 1; i < nodes; ++i) {
    int gte = rng.chance(1, 3) ? rng.range(2, 3) : 1;
    builder.add_edge(node_name(parent[static_cast<std::size_t>(i)]), node_name(i), gte);
  }
  return builder.build();
}

BipartiteGraph random_bipartite(Rng& rng, int max_x, int max_y, int max_edges) {
  if (max_x < 1 || max_y < 1) throw InvalidInputError("bipartite sides must be positive");
  int x = rng.range(1, max_x);
  int y = rng.range(1, max_y);
  BipartiteGraph bg;
  for (int i = 0; i < x; ++i) bg.add_left("x" + std::to_string(i));
  for (int j = 0; j < y; ++j) bg.ensure_right("y" + std::to_string(j));
  int limit = std::min(max_edges, x * y);
  int edges = limit > 0 ? rng.range(0, limit) : 0;
  std::set<std::pair<int, int>> used;
  int attempts = 0;
  while (static_cast<int>(used.size()) < edges && attempts < 20 * edges + 100) {
    ++attempts;
    int i = rng.below(x);
    int j = rng.below(y);
    if (!used.emplace(i, j).second) continue;
    bg.add_edge(i, j);
  }
  return bg;
}

}  // namespace tsim
