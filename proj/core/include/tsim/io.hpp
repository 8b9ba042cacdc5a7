#ifndef TSIM_IO_HPP
#define TSIM_IO_HPP

#include <iosfwd>
#include <string>

#include "tsim/graph.hpp"

namespace tsim {

enum class Semantics { sim, dual, strong, triple, triple_local, iso };

// Throws InvalidInputError for an unknown name.
Semantics semantics_from_string(const std::string& name);
std::string to_string(Semantics s);

// File loaders; the format is picked by extension (".json" is JSON, anything
// else is the text format). Quantifier suffixes are legal only in patterns.
Graph load_data_graph(const std::string& path);
PatternGraph load_pattern_graph(const std::string& path);

// Text format: '#' starts a comment, blank lines are skipped, otherwise
//   node <id> <label>
//   edge <src> <dst> [>=<p>]
Graph parse_data_graph_text(std::istream& in, const std::string& source = "<input>");
PatternGraph parse_pattern_graph_text(std::istream& in,
                                      const std::string& source = "<input>");

// JSON format: {"nodes": [{"id", "label"}...], "edges": [{"src", "dst",
// "gte"?}...]}; "gte" only in patterns. Unknown keys are rejected.
Graph parse_data_graph_json(std::istream& in, const std::string& source = "<input>");
PatternGraph parse_pattern_graph_json(std::istream& in,
                                      const std::string& source = "<input>");

// Serializers mirror the two input formats; parse(to_text(g)) reproduces g
// exactly (same node order, edge order, labels, quantifiers).
std::string to_text(const Graph& g);
std::string to_text(const PatternGraph& q);
std::string to_json(const Graph& g);
std::string to_json(const PatternGraph& q);

// Graphviz rendering (node labels shown as "id:label").
std::string to_dot(const Graph& g, const std::string& name = "g");

}  // namespace tsim

#endif
