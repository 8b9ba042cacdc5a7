#ifndef TSIM_TRIPLE_HPP
#define TSIM_TRIPLE_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include "tsim/bipartite.hpp"
#include "tsim/graph.hpp"
#include "tsim/simulation.hpp"

namespace tsim {

// Per-pattern-node neighbor partition plus candidate counters.
//
// A neighbor u' of u is label-repetition (LR) concerned when its label occurs
// more than once among u's neighbors on that side, or (child side only) when
// the edge u->u' carries a quantifier p >= 2. Such neighbors need pairwise
// distinct witnesses, checked with a bipartite matching; the rest (CP) only
// need some witness, tracked by counters:
//   child_as_match(v, u)  = |children(v)  ∩ sim(u)|
//   parent_as_match(v, u) = |parents(v) ∩ sim(u)|
class AuxStructures {
 public:
  const std::vector<NodeId>& cp_children(NodeId u) const { return cp_children_.at(u); }
  const std::vector<NodeId>& lr_children(NodeId u) const { return lr_children_.at(u); }
  const std::vector<NodeId>& cp_parents(NodeId u) const { return cp_parents_.at(u); }
  const std::vector<NodeId>& lr_parents(NodeId u) const { return lr_parents_.at(u); }

  int child_as_match(NodeId v, NodeId u) const;
  int parent_as_match(NodeId v, NodeId u) const;

 private:
  friend AuxStructures init_aux_structs(const PatternGraph&, const Graph&,
                                        const SimRelation&);
  friend void update_struct(AuxStructures&, const Graph&, NodeId, NodeId);

  std::size_t index(NodeId v, NodeId u) const;

  std::size_t pattern_size_ = 0;
  std::size_t data_size_ = 0;
  std::vector<std::vector<NodeId>> cp_children_, lr_children_;
  std::vector<std::vector<NodeId>> cp_parents_, lr_parents_;
  std::vector<int> child_counts_;   // [v * pattern_size + u]
  std::vector<int> parent_counts_;
};

// Classifies neighbors and seeds the counters for the given candidate sets.
AuxStructures init_aux_structs(const PatternGraph& q, const Graph& g,
                               const SimRelation& sim);

// Account for the removal of candidate pair (u, v): decrements
// child_as_match(v', u) for every parent v' of v and parent_as_match(v', u)
// for every child v' of v. Call exactly once per removed pair; a decrement
// below zero throws InternalError.
void update_struct(AuxStructures& aux, const Graph& g, NodeId u, NodeId v);

// Inspecting bipartite graph for the LR-concerned neighbors of u on side d:
// one left column per LR neighbor u' (pattern id), one right node per
// neighbor of v (in direction d) lying in sim(u'). The LR condition holds iff
// a matching covers every column.
BipartiteGraph lr_inspection_graph(const PatternGraph& q, const Graph& g,
                                   const AuxStructures& aux, const SimRelation& sim,
                                   NodeId u, NodeId v, Direction d);

// Child-side inspecting graph with counting quantifiers: a quantified child
// (p >= 2) contributes p columns, all sharing the same candidate row set.
BipartiteGraph lr_inspection_graph_quantified(const PatternGraph& q, const Graph& g,
                                              const AuxStructures& aux,
                                              const SimRelation& sim, NodeId u,
                                              NodeId v);

// Do v's neighbors satisfy all label-repetition constraints of u? Requires a
// plain pattern (throws UnsupportedError otherwise). Matching work is
// accumulated into *stats when given; *dump receives DOT renderings of the
// inspected bipartite graphs.
bool lr_checking(const PatternGraph& q, const Graph& g, const AuxStructures& aux,
                 const SimRelation& sim, NodeId u, NodeId v,
                 MatchingStats* stats = nullptr, std::ostream* dump = nullptr);

// As lr_checking, but quantified children demand p distinct witnesses. On a
// plain pattern this is exactly lr_checking.
bool lr_checking_quantified(const PatternGraph& q, const Graph& g,
                            const AuxStructures& aux, const SimRelation& sim,
                            NodeId u, NodeId v, MatchingStats* stats = nullptr,
                            std::ostream* dump = nullptr);

struct TripleStats {
  long passes = 0;            // full refinement sweeps, including the last clean one
  long lr_checks = 0;         // calls to the LR checking procedure
  long augmenting_paths = 0;  // augmenting paths applied across all matchings
  long removals = 0;          // candidate pairs discarded
};

struct TripleOptions {
  std::ostream* bipartite_dump = nullptr;
};

struct TripleMatch {
  SimRelation relation;
  MatchResult result;
};

// Maximum triple simulation: dual simulation strengthened so that same-label
// (and quantified) neighbors are witnessed by pairwise distinct data nodes.
// Returns nullopt when some pattern node loses all candidates. Stats are
// filled either way.
std::optional<TripleMatch> triple_simulation(const PatternGraph& q, const Graph& g,
                                             TripleStats* stats = nullptr,
                                             const TripleOptions& options = {});

// Rewrites every quantified edge (u, u', >=p) by replicating u' and its
// descendant subtree p times with fresh node ids, yielding a plain pattern
// with the same triple-simulation results. Requires each quantified child's
// descendant subgraph to be a tree reachable only through that edge; throws
// UnsupportedError otherwise. Plain patterns come back structurally identical.
PatternGraph transform_quantified_to_lr(const PatternGraph& q);

// Same nodes and edges with every quantifier dropped to "at least one".
PatternGraph strip_quantifiers(const PatternGraph& q);

}  // namespace tsim

#endif
