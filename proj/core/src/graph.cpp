#include "tsim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

#include "tsim/error.hpp"

namespace tsim {

bool NodeSet::insert(NodeId v) {
  if (pos_.find(v) != pos_.end()) return false;
  pos_.emplace(v, order_.size());
  order_.push_back(v);
  return true;
}

bool NodeSet::erase(NodeId v) {
  auto it = pos_.find(v);
  if (it == pos_.end()) return false;
  order_[it->second] = kGone;
  pos_.erase(it);
  return true;
}

std::vector<NodeId> NodeSet::items() const {
  std::vector<NodeId> out;
  out.reserve(pos_.size());
  for (NodeId v : order_)
    if (v != kGone) out.push_back(v);
  return out;
}

bool NodeSet::operator==(const NodeSet& other) const {
  if (size() != other.size()) return false;
  for (const auto& [v, slot] : pos_) {
    (void)slot;
    if (!other.contains(v)) return false;
  }
  return true;
}

std::optional<NodeId> Graph::find_node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId Graph::node(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw InvalidInputError("unknown node '" + id + "'");
  return it->second;
}

void Graph::check_node(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= ids_.size())
    throw InvalidInputError("node index " + std::to_string(v) + " out of range");
}

const std::string& Graph::id(NodeId v) const {
  check_node(v);
  return ids_[v];
}

const std::string& Graph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

const std::vector<NodeId>& Graph::children(NodeId v) const {
  check_node(v);
  return children_[v];
}

const std::vector<NodeId>& Graph::parents(NodeId v) const {
  check_node(v);
  return parents_[v];
}

bool Graph::has_edge(NodeId src, NodeId dst) const {
  check_node(src);
  check_node(dst);
  return edge_set_.count(edge_key(src, dst)) > 0;
}

const std::vector<NodeId>& Graph::nodes_with_label(const std::string& label) const {
  static const std::vector<NodeId> empty;
  auto it = by_label_.find(label);
  return it == by_label_.end() ? empty : it->second;
}

namespace {

void check_token(const std::string& value, const char* what) {
  if (value.empty()) throw InvalidInputError(std::string(what) + " must not be empty");
  for (unsigned char c : value)
    if (std::isspace(c) || c == '#')
      throw InvalidInputError(std::string(what) + " '" + value +
                              "' contains whitespace or '#'");
}

}  // namespace

NodeId GraphBuilder::add_node(std::string id, std::string label) {
  check_token(id, "node id");
  check_token(label, "label");
  if (graph_.index_.find(id) != graph_.index_.end())
    throw InvalidInputError("duplicate node '" + id + "'");
  NodeId v = static_cast<NodeId>(graph_.ids_.size());
  graph_.index_.emplace(id, v);
  graph_.by_label_[label].push_back(v);
  graph_.ids_.push_back(std::move(id));
  graph_.labels_.push_back(std::move(label));
  graph_.children_.emplace_back();
  graph_.parents_.emplace_back();
  return v;
}

void GraphBuilder::add_edge(NodeId src, NodeId dst) {
  graph_.check_node(src);
  graph_.check_node(dst);
  std::uint64_t key = Graph::edge_key(src, dst);
  if (!graph_.edge_set_.insert(key).second)
    throw InvalidInputError("duplicate edge " + graph_.ids_[src] + " -> " +
                            graph_.ids_[dst]);
  graph_.children_[src].push_back(dst);
  graph_.parents_[dst].push_back(src);
  graph_.edges_.emplace_back(src, dst);
}

void GraphBuilder::add_edge(const std::string& src, const std::string& dst) {
  add_edge(graph_.node(src), graph_.node(dst));
}

int PatternGraph::quantifier(NodeId src, NodeId dst) const {
  if (!graph_.has_edge(src, dst))
    throw InvalidInputError("no edge " + graph_.id(src) + " -> " + graph_.id(dst));
  auto it = quantified_.find(Graph::edge_key(src, dst));
  return it == quantified_.end() ? 1 : it->second;
}

std::vector<std::tuple<NodeId, NodeId, int>> PatternGraph::quantified_edges() const {
  std::vector<std::tuple<NodeId, NodeId, int>> out;
  for (const auto& [src, dst] : graph_.edges()) {
    auto it = quantified_.find(Graph::edge_key(src, dst));
    if (it != quantified_.end()) out.emplace_back(src, dst, it->second);
  }
  return out;
}

NodeId PatternBuilder::add_node(std::string id, std::string label) {
  return builder_.add_node(std::move(id), std::move(label));
}

void PatternBuilder::add_edge(NodeId src, NodeId dst, int gte) {
  if (gte < 1)
    throw InvalidInputError("quantifier value must be >= 1, got " + std::to_string(gte));
  builder_.add_edge(src, dst);
  if (gte > 1) quantified_.emplace(Graph::edge_key(src, dst), gte);
}

void PatternBuilder::add_edge(const std::string& src, const std::string& dst, int gte) {
  add_edge(builder_.node(src), builder_.node(dst), gte);
}

PatternGraph PatternBuilder::build() {
  PatternGraph q;
  q.graph_ = builder_.build();
  q.quantified_ = std::move(quantified_);
  const Graph& g = q.graph_;
  if (g.node_count() == 0)
    throw InvalidInputError("pattern must have at least one node");
  // Connectivity in the undirected sense.
  std::vector<char> seen(g.node_count(), 0);
  std::queue<NodeId> frontier;
  frontier.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (Direction d : {Direction::child, Direction::parent}) {
      for (NodeId w : neighbors(g, v, d)) {
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          frontier.push(w);
        }
      }
    }
  }
  if (reached != g.node_count())
    throw InvalidInputError("pattern graph must be connected");
  return q;
}

const std::vector<NodeId>& neighbors(const Graph& g, NodeId v, Direction d) {
  return d == Direction::child ? g.children(v) : g.parents(v);
}

namespace {

// Undirected BFS distances from source; -1 marks unreachable nodes.
std::vector<int> bfs_distances(const Graph& g, NodeId source) {
  std::vector<int> dist(g.node_count(), -1);
  std::queue<NodeId> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    NodeId v = frontier.front();
    frontier.pop();
    for (Direction d : {Direction::child, Direction::parent}) {
      for (NodeId w : neighbors(g, v, d)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }
  }
  return dist;
}

}  // namespace

std::optional<int> undirected_distance(const Graph& g, NodeId a, NodeId b) {
  // Validate both ends up front so an unknown target fails even when
  // disconnected from the source.
  g.id(a);
  g.id(b);
  std::vector<int> dist = bfs_distances(g, a);
  if (dist[b] < 0) return std::nullopt;
  return dist[b];
}

int diameter(const Graph& g) {
  if (g.node_count() == 0) throw InvalidInputError("diameter of an empty graph");
  int best = 0;
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v) {
    std::vector<int> dist = bfs_distances(g, v);
    for (int d : dist) {
      if (d < 0) throw InvalidInputError("diameter of a disconnected graph");
      best = std::max(best, d);
    }
  }
  return best;
}

NodeSet potential_matches(const PatternGraph& q, const Graph& g, NodeId u) {
  NodeSet out;
  for (NodeId v : g.nodes_with_label(q.graph().label(u))) out.insert(v);
  return out;
}

}  // namespace tsim
