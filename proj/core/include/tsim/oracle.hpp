#ifndef TSIM_ORACLE_HPP
#define TSIM_ORACLE_HPP

#include <optional>
#include <vector>

#include "tsim/bipartite.hpp"
#include "tsim/graph.hpp"
#include "tsim/simulation.hpp"

namespace tsim {

// Exhaustive reference implementations used to validate the engine. They are
// deliberately independent of the production algorithms (no worklists, no
// counters, no Hopcroft-Karp) and refuse inputs beyond their size guards with
// OversizeError. Nothing here belongs on a production path.

// image[u] = data node matched to pattern node u.
struct IsoEmbedding {
  std::vector<NodeId> image;
};

// All injective, label- and edge-preserving embeddings of a plain pattern
// (extra data edges are allowed). Guards: |V_Q| <= 6 and |V| <= 14 (the
// search is factorial in the pattern size).
std::vector<IsoEmbedding> enumerate_isomorphisms(const PatternGraph& q,
                                                 const Graph& g);

// Maximum triple-simulation relation by definition: start from the label
// candidates and repeatedly delete any pair whose child or parent conditions
// fail, deciding each condition by exhaustive search over injective witness
// assignments (a quantified child claims p witness slots). The shrink loop is
// polynomial outside the witness search, so the pattern guard is looser:
// |V_Q| <= 8 and |V| <= 14.
std::optional<SimRelation> brute_force_triple_relation(const PatternGraph& q,
                                                       const Graph& g);

// Maximum matching cardinality by enumerating edge subsets. Guard: at most
// 20 edges.
int brute_force_matching_size(const BipartiteGraph& bg);

// Hall's condition: every subset of X has at least as many right neighbors
// as members. Equivalent to the existence of a complete matching. Guard:
// |X| <= 10.
bool hall_condition(const BipartiteGraph& bg);

}  // namespace tsim

#endif
