#include "tsim/triple.hpp"

#include <algorithm>
#include <ostream>
#include <queue>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "tsim/error.hpp"

namespace tsim {

std::size_t AuxStructures::index(NodeId v, NodeId u) const {
  if (v < 0 || static_cast<std::size_t>(v) >= data_size_)
    throw InvalidInputError("data node index " + std::to_string(v) + " out of range");
  if (u < 0 || static_cast<std::size_t>(u) >= pattern_size_)
    throw InvalidInputError("pattern node index " + std::to_string(u) + " out of range");
  return static_cast<std::size_t>(v) * pattern_size_ + static_cast<std::size_t>(u);
}

int AuxStructures::child_as_match(NodeId v, NodeId u) const {
  return child_counts_[index(v, u)];
}

int AuxStructures::parent_as_match(NodeId v, NodeId u) const {
  return parent_counts_[index(v, u)];
}

AuxStructures init_aux_structs(const PatternGraph& q, const Graph& g,
                               const SimRelation& sim) {
  const Graph& pattern = q.graph();
  const std::size_t n = pattern.node_count();
  if (sim.pattern_size() != n)
    throw InvalidInputError("relation size does not match the pattern");

  AuxStructures aux;
  aux.pattern_size_ = n;
  aux.data_size_ = g.node_count();
  aux.cp_children_.resize(n);
  aux.lr_children_.resize(n);
  aux.cp_parents_.resize(n);
  aux.lr_parents_.resize(n);

  // Label multiplicity decides CP vs LR per side; a quantified edge forces
  // its child into LR regardless of labels.
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    std::unordered_map<std::string, int> occurrences;
    for (NodeId c : pattern.children(u)) ++occurrences[pattern.label(c)];
    for (NodeId c : pattern.children(u)) {
      if (occurrences[pattern.label(c)] > 1 || q.quantifier(u, c) > 1)
        aux.lr_children_[u].push_back(c);
      else
        aux.cp_children_[u].push_back(c);
    }
    occurrences.clear();
    for (NodeId p : pattern.parents(u)) ++occurrences[pattern.label(p)];
    for (NodeId p : pattern.parents(u)) {
      if (occurrences[pattern.label(p)] > 1)
        aux.lr_parents_[u].push_back(p);
      else
        aux.cp_parents_[u].push_back(p);
    }
  }

  aux.child_counts_.assign(aux.data_size_ * n, 0);
  aux.parent_counts_.assign(aux.data_size_ * n, 0);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (NodeId w : sim.at(u).items()) {
      for (NodeId p : g.parents(w)) ++aux.child_counts_[aux.index(p, u)];
      for (NodeId c : g.children(w)) ++aux.parent_counts_[aux.index(c, u)];
    }
  }
  return aux;
}

void update_struct(AuxStructures& aux, const Graph& g, NodeId u, NodeId v) {
  for (NodeId p : g.parents(v)) {
    int& count = aux.child_counts_[aux.index(p, u)];
    if (--count < 0)
      throw InternalError("child_as_match underflow at (" + g.id(p) + ", pattern " +
                          std::to_string(u) + ")");
  }
  for (NodeId c : g.children(v)) {
    int& count = aux.parent_counts_[aux.index(c, u)];
    if (--count < 0)
      throw InternalError("parent_as_match underflow at (" + g.id(c) + ", pattern " +
                          std::to_string(u) + ")");
  }
}

namespace {

// Adds `columns` left columns for pattern neighbor u_adj and connects each to
// every direction-d neighbor of v lying in sim(u_adj).
void add_lr_columns(BipartiteGraph& bg, const PatternGraph& q, const Graph& g,
                    const SimRelation& sim, NodeId u_adj, int columns, NodeId v,
                    Direction d) {
  const std::string& base = q.graph().id(u_adj);
  for (int i = 1; i <= columns; ++i) {
    int x = bg.add_left(i == 1 ? base : base + "~" + std::to_string(i));
    for (NodeId w : neighbors(g, v, d)) {
      if (sim.at(u_adj).contains(w)) bg.add_edge(x, bg.ensure_right(g.id(w)));
    }
  }
}

BipartiteGraph inspection_graph(const PatternGraph& q, const Graph& g,
                                const AuxStructures& aux, const SimRelation& sim,
                                NodeId u, NodeId v, Direction d, bool quantified) {
  BipartiteGraph bg;
  const auto& concerned =
      d == Direction::child ? aux.lr_children(u) : aux.lr_parents(u);
  for (NodeId u_adj : concerned) {
    int columns = quantified && d == Direction::child ? q.quantifier(u, u_adj) : 1;
    add_lr_columns(bg, q, g, sim, u_adj, columns, v, d);
  }
  return bg;
}

bool lr_verdict(const PatternGraph& q, const Graph& g, const AuxStructures& aux,
                const SimRelation& sim, NodeId u, NodeId v, bool quantified,
                MatchingStats* stats, std::ostream* dump) {
  BipartiteGraph children_bg =
      inspection_graph(q, g, aux, sim, u, v, Direction::child, quantified);
  if (dump)
    *dump << "// children of (" << q.graph().id(u) << ", " << g.id(v) << ")\n"
          << children_bg.to_dot();
  if (!has_complete_matching(children_bg, stats)) return false;

  BipartiteGraph parents_bg =
      inspection_graph(q, g, aux, sim, u, v, Direction::parent, quantified);
  if (dump)
    *dump << "// parents of (" << q.graph().id(u) << ", " << g.id(v) << ")\n"
          << parents_bg.to_dot();
  return has_complete_matching(parents_bg, stats);
}

}  // namespace

BipartiteGraph lr_inspection_graph(const PatternGraph& q, const Graph& g,
                                   const AuxStructures& aux, const SimRelation& sim,
                                   NodeId u, NodeId v, Direction d) {
  return inspection_graph(q, g, aux, sim, u, v, d, /*quantified=*/false);
}

BipartiteGraph lr_inspection_graph_quantified(const PatternGraph& q, const Graph& g,
                                              const AuxStructures& aux,
                                              const SimRelation& sim, NodeId u,
                                              NodeId v) {
  return inspection_graph(q, g, aux, sim, u, v, Direction::child,
                          /*quantified=*/true);
}

bool lr_checking(const PatternGraph& q, const Graph& g, const AuxStructures& aux,
                 const SimRelation& sim, NodeId u, NodeId v, MatchingStats* stats,
                 std::ostream* dump) {
  if (q.is_quantified())
    throw UnsupportedError("lr_checking requires a plain pattern");
  return lr_verdict(q, g, aux, sim, u, v, /*quantified=*/false, stats, dump);
}

bool lr_checking_quantified(const PatternGraph& q, const Graph& g,
                            const AuxStructures& aux, const SimRelation& sim,
                            NodeId u, NodeId v, MatchingStats* stats,
                            std::ostream* dump) {
  return lr_verdict(q, g, aux, sim, u, v, /*quantified=*/true, stats, dump);
}

std::optional<TripleMatch> triple_simulation(const PatternGraph& q, const Graph& g,
                                             TripleStats* stats,
                                             const TripleOptions& options) {
  TripleStats local;
  TripleStats& st = stats ? *stats : local;
  st = TripleStats{};

  const Graph& pattern = q.graph();
  const std::size_t n = pattern.node_count();
  const bool quantified = q.is_quantified();

  SimRelation sim(n);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    sim.at(u) = potential_matches(q, g, u);
    if (sim.at(u).empty()) return std::nullopt;
  }

  AuxStructures aux = init_aux_structs(q, g, sim);

  bool changed = true;
  while (changed) {
    changed = false;
    ++st.passes;
    for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
      for (NodeId v : sim.at(u).items()) {
        // Short-circuit order: child duality, parent duality, LR. The first
        // failure removes v, so the counters are adjusted exactly once.
        bool remove = false;
        for (NodeId u_child : aux.cp_children(u)) {
          if (aux.child_as_match(v, u_child) == 0) {
            remove = true;
            break;
          }
        }
        if (!remove) {
          for (NodeId u_parent : aux.cp_parents(u)) {
            if (aux.parent_as_match(v, u_parent) == 0) {
              remove = true;
              break;
            }
          }
        }
        if (!remove &&
            (!aux.lr_children(u).empty() || !aux.lr_parents(u).empty())) {
          ++st.lr_checks;
          MatchingStats ms;
          bool ok = quantified ? lr_checking_quantified(q, g, aux, sim, u, v, &ms,
                                                        options.bipartite_dump)
                               : lr_checking(q, g, aux, sim, u, v, &ms,
                                             options.bipartite_dump);
          st.augmenting_paths += ms.augmenting_paths;
          remove = !ok;
        }
        if (remove) {
          sim.at(u).erase(v);
          update_struct(aux, g, u, v);
          ++st.removals;
          changed = true;
          if (sim.at(u).empty()) return std::nullopt;
        }
      }
    }
  }

  TripleMatch match{sim, build_match_result(q, g, sim)};
  return match;
}

namespace {

// String-keyed working copy used by the quantifier rewrite.
struct WorkingPattern {
  struct Node {
    std::string id;
    std::string label;
  };
  struct Edge {
    std::string src;
    std::string dst;
    int p;
  };
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::unordered_set<std::string> ids;

  std::string fresh(const std::string& base) {
    std::string candidate = base;
    while (ids.count(candidate)) candidate += "_";
    ids.insert(candidate);
    return candidate;
  }
};

// Directed reachability from `root`, in BFS discovery order.
std::vector<std::string> descendants(const WorkingPattern& wp, const std::string& root) {
  std::unordered_map<std::string, std::vector<std::string>> children;
  for (const auto& e : wp.edges) children[e.src].push_back(e.dst);
  std::vector<std::string> order{root};
  std::unordered_set<std::string> seen{root};
  std::queue<std::string> frontier;
  frontier.push(root);
  while (!frontier.empty()) {
    std::string v = frontier.front();
    frontier.pop();
    for (const std::string& c : children[v]) {
      if (seen.insert(c).second) {
        order.push_back(c);
        frontier.push(c);
      }
    }
  }
  return order;
}

// Replaces the subtree of one quantified edge by p fresh copies. The chosen
// edge's descendant set must contain no further quantified edge.
void expand_edge(WorkingPattern& wp, std::size_t edge_index) {
  const auto quantified_edge = wp.edges[edge_index];  // copy; wp.edges changes
  std::vector<std::string> subtree = descendants(wp, quantified_edge.dst);
  std::unordered_set<std::string> in_subtree(subtree.begin(), subtree.end());

  if (in_subtree.count(quantified_edge.src))
    throw UnsupportedError("cannot rewrite quantifier on edge " + quantified_edge.src +
                           " -> " + quantified_edge.dst +
                           ": the quantified subtree reaches back to its source");
  // Tree shape: every subtree node has exactly one incoming edge (the root's
  // is the quantified edge itself).
  std::unordered_map<std::string, int> indegree;
  for (const auto& e : wp.edges)
    if (in_subtree.count(e.dst)) ++indegree[e.dst];
  for (const std::string& w : subtree) {
    if (indegree[w] != 1)
      throw UnsupportedError("cannot rewrite quantifier on edge " + quantified_edge.src +
                             " -> " + quantified_edge.dst + ": node " + w +
                             " has " + std::to_string(indegree[w]) +
                             " incoming edges, so the subtree is not a tree");
  }
  // Disjointness: no edge may enter the subtree from the rest of the pattern.
  for (const auto& e : wp.edges) {
    if (e.dst == quantified_edge.dst || !in_subtree.count(e.dst)) continue;
    if (!in_subtree.count(e.src))
      throw UnsupportedError("cannot rewrite quantifier on edge " + quantified_edge.src +
                             " -> " + quantified_edge.dst +
                             ": node " + e.dst + " is shared with the rest of the pattern");
  }

  std::unordered_map<std::string, std::string> labels;
  for (const auto& node : wp.nodes) labels[node.id] = node.label;
  std::vector<WorkingPattern::Edge> internal;
  for (const auto& e : wp.edges)
    if (in_subtree.count(e.src) && in_subtree.count(e.dst)) internal.push_back(e);

  // Drop the subtree and every edge touching it (only the quantified edge and
  // internal edges can, per the checks above).
  std::vector<WorkingPattern::Node> kept_nodes;
  for (auto& node : wp.nodes)
    if (!in_subtree.count(node.id)) kept_nodes.push_back(std::move(node));
  wp.nodes = std::move(kept_nodes);
  std::vector<WorkingPattern::Edge> kept_edges;
  for (auto& e : wp.edges)
    if (!in_subtree.count(e.src) && !in_subtree.count(e.dst))
      kept_edges.push_back(std::move(e));
  wp.edges = std::move(kept_edges);
  for (const std::string& w : subtree) wp.ids.erase(w);

  for (int copy = 1; copy <= quantified_edge.p; ++copy) {
    std::unordered_map<std::string, std::string> rename;
    for (const std::string& w : subtree) {
      // The first copy keeps the original id, mirroring the column naming of
      // the inspecting bipartite graph (base, base~2, ...).
      std::string id = copy == 1 ? wp.fresh(w)
                                 : wp.fresh(w + "~" + std::to_string(copy));
      rename[w] = id;
      wp.nodes.push_back({id, labels[w]});
    }
    wp.edges.push_back({quantified_edge.src, rename[quantified_edge.dst], 1});
    for (const auto& e : internal) wp.edges.push_back({rename[e.src], rename[e.dst], e.p});
  }
}

}  // namespace

PatternGraph transform_quantified_to_lr(const PatternGraph& q) {
  WorkingPattern wp;
  const Graph& pattern = q.graph();
  for (NodeId u = 0; static_cast<std::size_t>(u) < pattern.node_count(); ++u) {
    wp.nodes.push_back({pattern.id(u), pattern.label(u)});
    wp.ids.insert(pattern.id(u));
  }
  for (const auto& [src, dst] : pattern.edges())
    wp.edges.push_back({pattern.id(src), pattern.id(dst), q.quantifier(src, dst)});

  for (;;) {
    // Expand an innermost quantified edge first so each step eliminates one.
    std::vector<std::size_t> quantified;
    for (std::size_t i = 0; i < wp.edges.size(); ++i)
      if (wp.edges[i].p > 1) quantified.push_back(i);
    if (quantified.empty()) break;

    std::size_t chosen = quantified.front();
    for (std::size_t i : quantified) {
      std::vector<std::string> subtree = descendants(wp, wp.edges[i].dst);
      std::unordered_set<std::string> in_subtree(subtree.begin(), subtree.end());
      bool innermost = true;
      for (const auto& e : wp.edges) {
        if (e.p > 1 && in_subtree.count(e.src)) {
          innermost = false;
          break;
        }
      }
      if (innermost) {
        chosen = i;
        break;
      }
    }
    expand_edge(wp, chosen);
  }

  PatternBuilder builder;
  for (const auto& node : wp.nodes) builder.add_node(node.id, node.label);
  for (const auto& e : wp.edges) builder.add_edge(e.src, e.dst, e.p);
  return builder.build();
}

PatternGraph strip_quantifiers(const PatternGraph& q) {
  PatternBuilder builder;
  const Graph& pattern = q.graph();
  for (NodeId u = 0; static_cast<std::size_t>(u) < pattern.node_count(); ++u)
    builder.add_node(pattern.id(u), pattern.label(u));
  for (const auto& [src, dst] : pattern.edges())
    builder.add_edge(pattern.id(src), pattern.id(dst), 1);
  return builder.build();
}

}  // namespace tsim
