#ifndef TSIM_GRAPH_HPP
#define TSIM_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

namespace tsim {

// Dense index of a node inside one Graph. Indices are assigned in insertion
// order and are not comparable across graphs; the original string id is kept
// for output and for correlating nodes across derived graphs (balls, results).
using NodeId = std::int32_t;

enum class Direction { child, parent };

// Set of node ids that iterates in insertion order and supports O(1)
// membership tests and removals. Removals leave tombstones, so iteration cost
// is proportional to the historical size; sets used here only ever shrink
// from their initial fill, which keeps that bounded.
class NodeSet {
 public:
  NodeSet() = default;

  // Returns false (and does nothing) if v is already present.
  bool insert(NodeId v);
  // Returns false if v was not present.
  bool erase(NodeId v);
  bool contains(NodeId v) const { return pos_.find(v) != pos_.end(); }

  std::size_t size() const { return pos_.size(); }
  bool empty() const { return pos_.empty(); }

  // Live elements in insertion order. A snapshot: safe to iterate while
  // erasing from the set itself.
  std::vector<NodeId> items() const;

  bool operator==(const NodeSet& other) const;

 private:
  static constexpr NodeId kGone = -1;
  std::vector<NodeId> order_;
  std::unordered_map<NodeId, std::size_t> pos_;
};

// Directed graph with one label per node. Immutable once built (construct
// through GraphBuilder). Nodes and edges iterate in insertion order; edge
// membership is O(1). Self-loops are allowed, duplicate edges are not.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const { return ids_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_node(const std::string& id) const { return index_.count(id) > 0; }
  std::optional<NodeId> find_node(const std::string& id) const;
  // Throws InvalidInputError for an unknown id.
  NodeId node(const std::string& id) const;

  const std::string& id(NodeId v) const;
  const std::string& label(NodeId v) const;

  const std::vector<NodeId>& children(NodeId v) const;
  const std::vector<NodeId>& parents(NodeId v) const;

  bool has_edge(NodeId src, NodeId dst) const;
  const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

  bool has_label(const std::string& label) const { return by_label_.count(label) > 0; }
  // Nodes carrying `label`, in insertion order; empty for an unknown label.
  const std::vector<NodeId>& nodes_with_label(const std::string& label) const;

  // Packed (src, dst) key for edge sets and quantifier maps.
  static std::uint64_t edge_key(NodeId src, NodeId dst) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(src)) << 32) |
           static_cast<std::uint32_t>(dst);
  }

 private:
  friend class GraphBuilder;

  void check_node(NodeId v) const;

  std::vector<std::string> ids_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::vector<NodeId>> parents_;
  std::vector<std::pair<NodeId, NodeId>> edges_;
  std::unordered_set<std::uint64_t> edge_set_;
  std::unordered_map<std::string, std::vector<NodeId>> by_label_;
};

// Assembles a Graph. Node ids and labels must be non-empty and free of
// whitespace and '#' so every graph survives the text format unchanged.
class GraphBuilder {
 public:
  // Throws InvalidInputError on a duplicate or malformed id.
  NodeId add_node(std::string id, std::string label);
  // Throws InvalidInputError on unknown endpoints or a duplicate edge.
  void add_edge(NodeId src, NodeId dst);
  void add_edge(const std::string& src, const std::string& dst);

  std::size_t node_count() const { return graph_.node_count(); }
  bool has_node(const std::string& id) const { return graph_.has_node(id); }
  NodeId node(const std::string& id) const { return graph_.node(id); }
  bool has_edge(NodeId src, NodeId dst) const { return graph_.has_edge(src, dst); }

  Graph build() { return std::move(graph_); }

 private:
  Graph graph_;
};

// A connected directed pattern. Edges may carry a counting quantifier
// "at least p" with p >= 2; an unquantified edge means "at least one".
// A pattern with no quantified edge is called plain.
class PatternGraph {
 public:
  PatternGraph() = default;

  const Graph& graph() const { return graph_; }
  // 1 for a plain edge; throws InvalidInputError if (src,dst) is not an edge.
  int quantifier(NodeId src, NodeId dst) const;
  bool is_quantified() const { return !quantified_.empty(); }
  // Quantified edges only (p >= 2), in edge insertion order.
  std::vector<std::tuple<NodeId, NodeId, int>> quantified_edges() const;

 private:
  friend class PatternBuilder;
  Graph graph_;
  std::unordered_map<std::uint64_t, int> quantified_;
};

// Assembles a PatternGraph; build() enforces connectivity (in the undirected
// sense) and at least one node. "gte" 1 normalizes to a plain edge.
class PatternBuilder {
 public:
  NodeId add_node(std::string id, std::string label);
  // Throws InvalidInputError when gte < 1.
  void add_edge(NodeId src, NodeId dst, int gte = 1);
  void add_edge(const std::string& src, const std::string& dst, int gte = 1);

  std::size_t node_count() const { return builder_.node_count(); }
  bool has_node(const std::string& id) const { return builder_.has_node(id); }
  NodeId node(const std::string& id) const { return builder_.node(id); }

  PatternGraph build();

 private:
  GraphBuilder builder_;
  std::unordered_map<std::uint64_t, int> quantified_;
};

// Adjacent nodes of v in the requested direction (insertion order).
const std::vector<NodeId>& neighbors(const Graph& g, NodeId v, Direction d);

// Hop count ignoring edge direction; nullopt when unreachable.
std::optional<int> undirected_distance(const Graph& g, NodeId a, NodeId b);

// Longest undirected shortest path. Throws InvalidInputError when the graph
// is empty or not connected.
int diameter(const Graph& g);

// Data nodes whose label equals that of pattern node u, in insertion order.
NodeSet potential_matches(const PatternGraph& q, const Graph& g, NodeId u);

}  // namespace tsim

#endif
