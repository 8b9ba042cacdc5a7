#ifndef TSIM_SIMULATION_HPP
#define TSIM_SIMULATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "tsim/graph.hpp"

namespace tsim {

// Candidate sets per pattern node: at(u) holds the data nodes u may map to.
// Indexed by the pattern's dense node ids.
class SimRelation {
 public:
  SimRelation() = default;
  explicit SimRelation(std::size_t pattern_node_count) : sets_(pattern_node_count) {}

  std::size_t pattern_size() const { return sets_.size(); }
  NodeSet& at(NodeId u);
  const NodeSet& at(NodeId u) const;

  // True when every pattern node has at least one candidate.
  bool total() const;

  // Pointwise set equality (iteration order ignored).
  bool operator==(const SimRelation& other) const;

 private:
  std::vector<NodeSet> sets_;
};

// A matched subgraph of the data graph. Node ids are the original string ids,
// so results extracted from balls or from the full graph compare naturally.
struct MatchResult {
  Graph graph;

  // Stable textual form: nodes sorted by id, then edges sorted by endpoint
  // ids. Used to deduplicate, order, and compare results.
  std::string canonical_text() const;
  bool operator==(const MatchResult& other) const {
    return canonical_text() == other.canonical_text();
  }
};

// Subgraph induced by a relation: the union of all candidate nodes plus every
// data edge witnessed by some pattern edge. S need not be total or maximal,
// but labels must agree pairwise (throws InvalidInputError otherwise).
MatchResult build_match_result(const PatternGraph& q, const Graph& g,
                               const SimRelation& s);

// Maximum graph simulation (child conditions only). Returns nullopt when some
// pattern node ends up with no candidate. Throws UnsupportedError for
// quantified patterns.
std::optional<SimRelation> graph_simulation(const PatternGraph& q, const Graph& g);

// Maximum dual simulation (child and parent conditions).
std::optional<SimRelation> dual_simulation(const PatternGraph& q, const Graph& g);

// Dual simulation with locality: one ball of radius diameter(Q) per data
// node, dual simulation inside each ball, one MatchResult per non-empty ball.
// Results are deduplicated and sorted by canonical text.
std::vector<MatchResult> strong_simulation(const PatternGraph& q, const Graph& g);

}  // namespace tsim

#endif
