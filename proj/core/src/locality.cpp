#include "tsim/locality.hpp"

#include <queue>
#include <unordered_set>

#include "balls.hpp"
#include "tsim/error.hpp"
#include "tsim/triple.hpp"

namespace tsim {

Ball extract_ball(const Graph& g, NodeId center, int radius) {
  const std::string& center_id = g.id(center);  // validates the index
  if (radius < 0)
    throw InvalidInputError("ball radius must be >= 0, got " + std::to_string(radius));

  std::vector<int> dist(g.node_count(), -1);
  std::vector<NodeId> members;
  std::queue<NodeId> frontier;
  dist[center] = 0;
  members.push_back(center);
  frontier.push(center);
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    if (dist[v] == radius) continue;
    for (Direction d : {Direction::child, Direction::parent}) {
      for (NodeId w : neighbors(g, v, d)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          members.push_back(w);
          frontier.push(w);
        }
      }
    }
  }

  // Induced subgraph over the members, ids preserved.
  GraphBuilder builder;
  for (NodeId v : members) builder.add_node(g.id(v), g.label(v));
  for (NodeId v : members) {
    for (NodeId w : g.children(v)) {
      if (dist[w] >= 0) builder.add_edge(builder.node(g.id(v)), builder.node(g.id(w)));
    }
  }
  return Ball{center_id, radius, builder.build()};
}

std::vector<MatchResult> match_plus(const PatternGraph& q, const Graph& g,
                                    const MatchPlusOptions& options) {
  int radius = diameter(q.graph());

  std::unordered_set<std::string> pattern_labels;
  const Graph& pattern = q.graph();
  for (NodeId u = 0; static_cast<std::size_t>(u) < pattern.node_count(); ++u)
    pattern_labels.insert(pattern.label(u));

  std::vector<NodeId> centers;
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v) {
    if (!options.center_prune || pattern_labels.count(g.label(v)))
      centers.push_back(v);
  }

  return detail::run_over_balls(
      g, radius, centers, [&](const Graph& ball_graph) -> std::optional<MatchResult> {
        std::optional<TripleMatch> match = triple_simulation(q, ball_graph);
        if (!match) return std::nullopt;
        return std::move(match->result);
      });
}

}  // namespace tsim
