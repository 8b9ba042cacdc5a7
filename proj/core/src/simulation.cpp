#include "tsim/simulation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "balls.hpp"
#include "tsim/error.hpp"
#include "tsim/locality.hpp"

namespace tsim {

NodeSet& SimRelation::at(NodeId u) {
  if (u < 0 || static_cast<std::size_t>(u) >= sets_.size())
    throw InvalidInputError("pattern node index " + std::to_string(u) + " out of range");
  return sets_[u];
}

const NodeSet& SimRelation::at(NodeId u) const {
  return const_cast<SimRelation*>(this)->at(u);
}

bool SimRelation::total() const {
  for (const NodeSet& s : sets_)
    if (s.empty()) return false;
  return !sets_.empty();
}

bool SimRelation::operator==(const SimRelation& other) const {
  if (sets_.size() != other.sets_.size()) return false;
  for (std::size_t u = 0; u < sets_.size(); ++u)
    if (!(sets_[u] == other.sets_[u])) return false;
  return true;
}

std::string MatchResult::canonical_text() const {
  std::vector<std::pair<std::string, std::string>> nodes;
  nodes.reserve(graph.node_count());
  for (NodeId v = 0; static_cast<std::size_t>(v) < graph.node_count(); ++v)
    nodes.emplace_back(graph.id(v), graph.label(v));
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::pair<std::string, std::string>> edges;
  edges.reserve(graph.edge_count());
  for (const auto& [src, dst] : graph.edges())
    edges.emplace_back(graph.id(src), graph.id(dst));
  std::sort(edges.begin(), edges.end());

  std::ostringstream out;
  for (const auto& [id, label] : nodes) out << "node " << id << ' ' << label << '\n';
  for (const auto& [src, dst] : edges) out << "edge " << src << ' ' << dst << '\n';
  return out.str();
}

MatchResult build_match_result(const PatternGraph& q, const Graph& g,
                               const SimRelation& s) {
  if (s.pattern_size() != q.graph().node_count())
    throw InvalidInputError("relation size does not match the pattern");

  std::set<std::string> node_ids;
  for (NodeId u = 0; static_cast<std::size_t>(u) < s.pattern_size(); ++u) {
    for (NodeId v : s.at(u).items()) {
      if (g.label(v) != q.graph().label(u))
        throw InvalidInputError("label mismatch: pattern node " + q.graph().id(u) +
                                " vs data node " + g.id(v));
      node_ids.insert(g.id(v));
    }
  }

  // A data edge belongs to the result iff some pattern edge is witnessed by
  // its endpoints.
  std::set<std::pair<std::string, std::string>> edge_ids;
  for (const auto& [u, u_child] : q.graph().edges()) {
    for (NodeId v : s.at(u).items()) {
      for (NodeId w : g.children(v)) {
        if (s.at(u_child).contains(w)) edge_ids.emplace(g.id(v), g.id(w));
      }
    }
  }

  GraphBuilder builder;
  for (const std::string& id : node_ids) builder.add_node(id, g.label(g.node(id)));
  for (const auto& [src, dst] : edge_ids) builder.add_edge(src, dst);
  return MatchResult{builder.build()};
}

namespace {

// Does v have a neighbor (in direction d) inside sim(u_adj)?
bool has_witness(const Graph& g, NodeId v, Direction d, const NodeSet& candidates) {
  for (NodeId w : neighbors(g, v, d))
    if (candidates.contains(w)) return true;
  return false;
}

// Shared worklist refinement for graph and dual simulation.
std::optional<SimRelation> simulation_fixpoint(const PatternGraph& q, const Graph& g,
                                               bool with_parents) {
  if (q.is_quantified())
    throw UnsupportedError("this semantics does not support quantified patterns");
  const Graph& pattern = q.graph();
  const std::size_t n = pattern.node_count();

  SimRelation sim(n);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) {
    sim.at(u) = potential_matches(q, g, u);
    if (sim.at(u).empty()) return std::nullopt;
  }

  std::deque<NodeId> worklist;
  std::vector<char> queued(n, 1);
  for (NodeId u = 0; static_cast<std::size_t>(u) < n; ++u) worklist.push_back(u);

  auto enqueue = [&](NodeId u) {
    if (!queued[u]) {
      queued[u] = 1;
      worklist.push_back(u);
    }
  };

  while (!worklist.empty()) {
    NodeId u = worklist.front();
    worklist.pop_front();
    queued[u] = 0;

    bool changed = false;
    for (NodeId v : sim.at(u).items()) {
      bool ok = true;
      for (NodeId u_child : pattern.children(u)) {
        if (!has_witness(g, v, Direction::child, sim.at(u_child))) {
          ok = false;
          break;
        }
      }
      if (ok && with_parents) {
        for (NodeId u_parent : pattern.parents(u)) {
          if (!has_witness(g, v, Direction::parent, sim.at(u_parent))) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        sim.at(u).erase(v);
        changed = true;
        if (sim.at(u).empty()) return std::nullopt;
      }
    }
    if (changed) {
      // Conditions of pattern neighbors mention sim(u); revisit them.
      for (NodeId w : pattern.parents(u)) enqueue(w);
      for (NodeId w : pattern.children(u)) enqueue(w);
    }
  }
  return sim;
}

}  // namespace

std::optional<SimRelation> graph_simulation(const PatternGraph& q, const Graph& g) {
  return simulation_fixpoint(q, g, /*with_parents=*/false);
}

std::optional<SimRelation> dual_simulation(const PatternGraph& q, const Graph& g) {
  return simulation_fixpoint(q, g, /*with_parents=*/true);
}

std::vector<MatchResult> strong_simulation(const PatternGraph& q, const Graph& g) {
  if (q.is_quantified())
    throw UnsupportedError("strong simulation does not support quantified patterns");
  int radius = diameter(q.graph());
  std::vector<NodeId> centers;
  centers.reserve(g.node_count());
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
    centers.push_back(v);
  return detail::run_over_balls(
      g, radius, centers, [&](const Graph& ball_graph) -> std::optional<MatchResult> {
        std::optional<SimRelation> rel = dual_simulation(q, ball_graph);
        if (!rel) return std::nullopt;
        return build_match_result(q, ball_graph, *rel);
      });
}

}  // namespace tsim
