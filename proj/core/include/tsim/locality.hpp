#ifndef TSIM_LOCALITY_HPP
#define TSIM_LOCALITY_HPP

#include <string>
#include <vector>

#include "tsim/graph.hpp"
#include "tsim/simulation.hpp"

namespace tsim {

// Materialized ball: the subgraph induced by all nodes within `radius`
// undirected hops of `center`. Node ids are the host graph's original ids.
struct Ball {
  std::string center;
  int radius = 0;
  Graph graph;
};

// Throws InvalidInputError for an unknown center or negative radius.
Ball extract_ball(const Graph& g, NodeId center, int radius);

struct MatchPlusOptions {
  // Only grow balls around centers whose label occurs in the pattern. This
  // skips balls that are reachable only through foreign-labeled hubs; disable
  // to consider every node as a center.
  bool center_prune = true;
};

// Triple simulation with locality: one ball of radius diameter(Q) per center,
// triple simulation inside each ball, one MatchResult per non-empty ball.
// Results are deduplicated and sorted by canonical text.
std::vector<MatchResult> match_plus(const PatternGraph& q, const Graph& g,
                                    const MatchPlusOptions& options = {});

}  // namespace tsim

#endif
