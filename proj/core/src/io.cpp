#include "tsim/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tsim/error.hpp"

namespace tsim {

Semantics semantics_from_string(const std::string& name) {
  if (name == "sim") return Semantics::sim;
  if (name == "dual") return Semantics::dual;
  if (name == "strong") return Semantics::strong;
  if (name == "triple") return Semantics::triple;
  if (name == "triple-local") return Semantics::triple_local;
  if (name == "iso") return Semantics::iso;
  throw InvalidInputError("unknown semantics '" + name +
                          "' (expected sim, dual, strong, triple, triple-local or iso)");
}

std::string to_string(Semantics s) {
  switch (s) {
    case Semantics::sim: return "sim";
    case Semantics::dual: return "dual";
    case Semantics::strong: return "strong";
    case Semantics::triple: return "triple";
    case Semantics::triple_local: return "triple-local";
    case Semantics::iso: return "iso";
  }
  throw InternalError("unhandled semantics value");
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (unsigned char c : s)
    if (!std::isdigit(c)) return false;
  return true;
}

// Parses ">=<p>" into p; recognizes and rejects the unsupported forms with a
// dedicated message. `pattern` tells whether quantifiers are legal at all.
int parse_quantifier(const std::string& token, bool pattern, const std::string& source,
                     int line) {
  if (!pattern)
    throw ParseError(source, line,
                     "quantifier '" + token + "' is only allowed in pattern files");
  if (token.rfind(">=", 0) == 0) {
    std::string value = token.substr(2);
    if (!value.empty() && value.back() == '%')
      throw ParseError(source, line, "unsupported quantifier '" + token +
                                         "': ratio quantifiers are not supported");
    if (!all_digits(value))
      throw ParseError(source, line, "malformed quantifier '" + token + "'");
    long p = std::stol(value);
    if (p < 1)
      throw ParseError(source, line, "illegal quantifier '" + token +
                                         "': the bound must be at least 1");
    if (p > 1000000)
      throw ParseError(source, line, "illegal quantifier '" + token + "': bound too large");
    return static_cast<int>(p);
  }
  if (token.rfind("=", 0) == 0) {
    std::string value = token.substr(1);
    if (value == "0")
      throw ParseError(source, line, "unsupported quantifier '" + token +
                                         "': exactly-zero (negation) is not supported");
    if (!value.empty() && value.back() == '%')
      throw ParseError(source, line, "unsupported quantifier '" + token +
                                         "': exact-percentage quantifiers are not supported");
    throw ParseError(source, line, "unsupported quantifier '" + token +
                                       "': only '>=<p>' is supported");
  }
  throw ParseError(source, line, "unexpected token '" + token + "' after edge");
}

// Line-oriented reader shared by the data and pattern text parsers. on_node /
// on_edge raise InvalidInputError for semantic problems; this wraps them with
// positions.
template <typename OnNode, typename OnEdge>
void read_text(std::istream& in, const std::string& source, bool pattern,
               OnNode&& on_node, OnEdge&& on_edge) {
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (std::size_t hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::vector<std::string> tokens = tokenize(line);
    if (tokens.empty()) continue;
    try {
      if (tokens[0] == "node") {
        if (tokens.size() != 3)
          throw ParseError(source, line_number,
                           "expected 'node <id> <label>', got " +
                               std::to_string(tokens.size() - 1) + " fields");
        on_node(tokens[1], tokens[2]);
      } else if (tokens[0] == "edge") {
        if (tokens.size() != 3 && tokens.size() != 4)
          throw ParseError(source, line_number,
                           "expected 'edge <src> <dst> [>=<p>]', got " +
                               std::to_string(tokens.size() - 1) + " fields");
        int gte = tokens.size() == 4
                      ? parse_quantifier(tokens[3], pattern, source, line_number)
                      : 1;
        on_edge(tokens[1], tokens[2], gte);
      } else {
        throw ParseError(source, line_number,
                         "expected 'node' or 'edge', got '" + tokens[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const InvalidInputError& e) {
      throw ParseError(source, line_number, e.what());
    }
  }
}

}  // namespace

Graph parse_data_graph_text(std::istream& in, const std::string& source) {
  GraphBuilder builder;
  read_text(
      in, source, /*pattern=*/false,
      [&](const std::string& id, const std::string& label) { builder.add_node(id, label); },
      [&](const std::string& src, const std::string& dst, int) {
        builder.add_edge(src, dst);
      });
  return builder.build();
}

PatternGraph parse_pattern_graph_text(std::istream& in, const std::string& source) {
  PatternBuilder builder;
  read_text(
      in, source, /*pattern=*/true,
      [&](const std::string& id, const std::string& label) { builder.add_node(id, label); },
      [&](const std::string& src, const std::string& dst, int gte) {
        builder.add_edge(src, dst, gte);
      });
  try {
    return builder.build();
  } catch (const InvalidInputError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

namespace {

using nlohmann::json;

json parse_json_document(std::istream& in, const std::string& source) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
}

void reject_unknown_keys(const json& object, std::initializer_list<const char*> known,
                         const std::string& source, const char* where) {
  for (const auto& [key, value] : object.items()) {
    (void)value;
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok)
      throw ParseError(source + ": unknown key '" + key + "' in " + where);
  }
}

std::string string_field(const json& object, const char* key, const std::string& source,
                         const char* where) {
  if (!object.contains(key))
    throw ParseError(source + ": missing key '" + std::string(key) + "' in " + where);
  if (!object[key].is_string())
    throw ParseError(source + ": key '" + std::string(key) + "' in " + where +
                     " must be a string");
  return object[key].get<std::string>();
}

// Walks the parsed document and feeds the builder callbacks; shared between
// the data and pattern JSON readers.
template <typename OnNode, typename OnEdge>
void read_json(const json& doc, const std::string& source, bool pattern,
               OnNode&& on_node, OnEdge&& on_edge) {
  if (!doc.is_object())
    throw ParseError(source + ": top level must be an object");
  reject_unknown_keys(doc, {"nodes", "edges"}, source, "the top-level object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw ParseError(source + ": 'nodes' must be an array");
  for (const json& node : doc["nodes"]) {
    if (!node.is_object())
      throw ParseError(source + ": every node must be an object");
    reject_unknown_keys(node, {"id", "label"}, source, "a node");
    on_node(string_field(node, "id", source, "a node"),
            string_field(node, "label", source, "a node"));
  }
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw ParseError(source + ": 'edges' must be an array");
  for (const json& edge : doc["edges"]) {
    if (!edge.is_object())
      throw ParseError(source + ": every edge must be an object");
    reject_unknown_keys(edge, {"src", "dst", "gte"}, source, "an edge");
    int gte = 1;
    if (edge.contains("gte")) {
      if (!pattern)
        throw ParseError(source + ": 'gte' is only allowed in pattern files");
      if (!edge["gte"].is_number_integer() || edge["gte"].get<long>() < 1)
        throw ParseError(source + ": 'gte' must be an integer >= 1");
      gte = static_cast<int>(edge["gte"].get<long>());
    }
    on_edge(string_field(edge, "src", source, "an edge"),
            string_field(edge, "dst", source, "an edge"), gte);
  }
}

}  // namespace

Graph parse_data_graph_json(std::istream& in, const std::string& source) {
  json doc = parse_json_document(in, source);
  GraphBuilder builder;
  try {
    read_json(
        doc, source, /*pattern=*/false,
        [&](const std::string& id, const std::string& label) { builder.add_node(id, label); },
        [&](const std::string& src, const std::string& dst, int) {
          builder.add_edge(src, dst);
        });
    return builder.build();
  } catch (const InvalidInputError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

PatternGraph parse_pattern_graph_json(std::istream& in, const std::string& source) {
  json doc = parse_json_document(in, source);
  PatternBuilder builder;
  try {
    read_json(
        doc, source, /*pattern=*/true,
        [&](const std::string& id, const std::string& label) { builder.add_node(id, label); },
        [&](const std::string& src, const std::string& dst, int gte) {
          builder.add_edge(src, dst, gte);
        });
    return builder.build();
  } catch (const InvalidInputError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

namespace {

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return in;
}

}  // namespace

Graph load_data_graph(const std::string& path) {
  std::ifstream in = open_file(path);
  return has_json_extension(path) ? parse_data_graph_json(in, path)
                                  : parse_data_graph_text(in, path);
}

PatternGraph load_pattern_graph(const std::string& path) {
  std::ifstream in = open_file(path);
  return has_json_extension(path) ? parse_pattern_graph_json(in, path)
                                  : parse_pattern_graph_text(in, path);
}

namespace {

void append_text(std::ostream& out, const Graph& g, const PatternGraph* q) {
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
    out << "node " << g.id(v) << ' ' << g.label(v) << '\n';
  for (const auto& [src, dst] : g.edges()) {
    out << "edge " << g.id(src) << ' ' << g.id(dst);
    if (q) {
      int p = q->quantifier(src, dst);
      if (p > 1) out << " >=" << p;
    }
    out << '\n';
  }
}

nlohmann::ordered_json graph_to_json(const Graph& g, const PatternGraph* q) {
  nlohmann::ordered_json doc;
  doc["nodes"] = nlohmann::ordered_json::array();
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
    doc["nodes"].push_back({{"id", g.id(v)}, {"label", g.label(v)}});
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& [src, dst] : g.edges()) {
    nlohmann::ordered_json edge{{"src", g.id(src)}, {"dst", g.id(dst)}};
    if (q) {
      int p = q->quantifier(src, dst);
      if (p > 1) edge["gte"] = p;
    }
    doc["edges"].push_back(edge);
  }
  return doc;
}

}  // namespace

std::string to_text(const Graph& g) {
  std::ostringstream out;
  append_text(out, g, nullptr);
  return out.str();
}

std::string to_text(const PatternGraph& q) {
  std::ostringstream out;
  append_text(out, q.graph(), &q);
  return out.str();
}

std::string to_json(const Graph& g) { return graph_to_json(g, nullptr).dump(2) + "\n"; }

std::string to_json(const PatternGraph& q) {
  return graph_to_json(q.graph(), &q).dump(2) + "\n";
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
    out << "  \"" << g.id(v) << "\" [label=\"" << g.id(v) << ':' << g.label(v)
        << "\"];\n";
  for (const auto& [src, dst] : g.edges())
    out << "  \"" << g.id(src) << "\" -> \"" << g.id(dst) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace tsim
