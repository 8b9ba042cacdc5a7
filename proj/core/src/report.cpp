#include "tsim/report.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "tsim/error.hpp"
#include "tsim/locality.hpp"
#include "tsim/oracle.hpp"
#include "tsim/triple.hpp"

namespace tsim {

namespace {

using ordered_json = nlohmann::ordered_json;

ReportGraph flatten(const Graph& g) {
  ReportGraph out;
  out.nodes.reserve(g.node_count());
  for (NodeId v = 0; static_cast<std::size_t>(v) < g.node_count(); ++v)
    out.nodes.emplace_back(g.id(v), g.label(v));
  std::sort(out.nodes.begin(), out.nodes.end());
  out.edges.reserve(g.edge_count());
  for (const auto& [src, dst] : g.edges())
    out.edges.emplace_back(g.id(src), g.id(dst));
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

std::vector<std::pair<std::string, std::vector<std::string>>> externalize(
    const PatternGraph& q, const Graph& g, const SimRelation& sim) {
  std::vector<std::pair<std::string, std::vector<std::string>>> out;
  out.reserve(sim.pattern_size());
  for (NodeId u = 0; static_cast<std::size_t>(u) < sim.pattern_size(); ++u) {
    std::vector<std::string> ids;
    for (NodeId v : sim.at(u).items()) ids.push_back(g.id(v));
    std::sort(ids.begin(), ids.end());
    out.emplace_back(q.graph().id(u), std::move(ids));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// f(Q): the subgraph selected by one embedding.
ReportGraph embedding_subgraph(const PatternGraph& q, const Graph& g,
                               const IsoEmbedding& embedding) {
  GraphBuilder builder;
  std::vector<NodeId> sorted(embedding.image.begin(), embedding.image.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](NodeId a, NodeId b) { return g.id(a) < g.id(b); });
  for (NodeId v : sorted) builder.add_node(g.id(v), g.label(v));
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [u, u_child] : q.graph().edges())
    edges.emplace_back(g.id(embedding.image[u]), g.id(embedding.image[u_child]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [src, dst] : edges) builder.add_edge(src, dst);
  return flatten(builder.build());
}

}  // namespace

MatchReport run_match(Semantics semantics, const PatternGraph& q, const Graph& g,
                      const RunOptions& options) {
  MatchReport report;
  report.semantics = semantics;
  ReportStats stats;

  auto started = std::chrono::steady_clock::now();
  switch (semantics) {
    case Semantics::sim:
    case Semantics::dual: {
      std::optional<SimRelation> rel = semantics == Semantics::sim
                                           ? graph_simulation(q, g)
                                           : dual_simulation(q, g);
      report.matched = rel.has_value();
      if (rel) {
        report.relation = externalize(q, g, *rel);
        report.results.push_back(flatten(build_match_result(q, g, *rel).graph));
      }
      break;
    }
    case Semantics::triple: {
      TripleStats ts;
      TripleOptions topt;
      topt.bipartite_dump = options.bipartite_dump;
      std::optional<TripleMatch> match = triple_simulation(q, g, &ts, topt);
      stats.passes = ts.passes;
      stats.lr_checks = ts.lr_checks;
      stats.augmenting_paths = ts.augmenting_paths;
      stats.removals = ts.removals;
      report.matched = match.has_value();
      if (match) {
        report.relation = externalize(q, g, match->relation);
        report.results.push_back(flatten(match->result.graph));
      }
      break;
    }
    case Semantics::strong: {
      for (const MatchResult& result : strong_simulation(q, g))
        report.results.push_back(flatten(result.graph));
      report.matched = !report.results.empty();
      break;
    }
    case Semantics::triple_local: {
      MatchPlusOptions mopt;
      mopt.center_prune = options.center_prune;
      for (const MatchResult& result : match_plus(q, g, mopt))
        report.results.push_back(flatten(result.graph));
      report.matched = !report.results.empty();
      break;
    }
    case Semantics::iso: {
      std::vector<IsoEmbedding> embeddings = enumerate_isomorphisms(q, g);
      for (const IsoEmbedding& e : embeddings) {
        std::vector<std::pair<std::string, std::string>> mapping;
        for (NodeId u = 0; static_cast<std::size_t>(u) < e.image.size(); ++u)
          mapping.emplace_back(q.graph().id(u), g.id(e.image[u]));
        std::sort(mapping.begin(), mapping.end());
        report.embeddings.push_back(std::move(mapping));
        report.results.push_back(embedding_subgraph(q, g, e));
      }
      std::sort(report.embeddings.begin(), report.embeddings.end());
      report.matched = !report.embeddings.empty();
      break;
    }
  }
  auto finished = std::chrono::steady_clock::now();
  stats.wall_ms =
      std::chrono::duration<double, std::milli>(finished - started).count();
  if (options.with_stats) report.stats = stats;
  return report;
}

std::string MatchReport::to_json() const {
  ordered_json doc;
  doc["semantics"] = to_string(semantics);
  doc["matched"] = matched;
  if (relation) {
    ordered_json rel = ordered_json::object();
    for (const auto& [pattern_id, data_ids] : *relation) rel[pattern_id] = data_ids;
    doc["relation"] = rel;
  }
  doc["results"] = ordered_json::array();
  for (const ReportGraph& result : results) {
    ordered_json item;
    item["nodes"] = ordered_json::array();
    for (const auto& [id, label] : result.nodes)
      item["nodes"].push_back({{"id", id}, {"label", label}});
    item["edges"] = ordered_json::array();
    for (const auto& [src, dst] : result.edges)
      item["edges"].push_back({{"src", src}, {"dst", dst}});
    doc["results"].push_back(item);
  }
  if (semantics == Semantics::iso) {
    doc["embeddings"] = ordered_json::array();
    for (const auto& embedding : embeddings) {
      ordered_json item = ordered_json::object();
      for (const auto& [pattern_id, data_id] : embedding) item[pattern_id] = data_id;
      doc["embeddings"].push_back(item);
    }
  }
  if (stats) {
    doc["stats"] = {{"passes", stats->passes},
                    {"lr_checks", stats->lr_checks},
                    {"augmenting_paths", stats->augmenting_paths},
                    {"removals", stats->removals},
                    {"wall_ms", stats->wall_ms}};
  }
  return doc.dump(2) + "\n";
}

MatchReport MatchReport::from_json(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("semantics") || !doc.contains("matched"))
    throw ParseError("report: 'semantics' and 'matched' are required");

  MatchReport report;
  report.semantics = semantics_from_string(doc["semantics"].get<std::string>());
  report.matched = doc["matched"].get<bool>();

  if (doc.contains("relation")) {
    if (report.semantics != Semantics::sim && report.semantics != Semantics::dual &&
        report.semantics != Semantics::triple)
      throw ParseError("report: 'relation' is only valid for sim, dual and triple");
    std::vector<std::pair<std::string, std::vector<std::string>>> rel;
    for (const auto& [pattern_id, ids] : doc["relation"].items())
      rel.emplace_back(pattern_id, ids.get<std::vector<std::string>>());
    std::sort(rel.begin(), rel.end());
    report.relation = std::move(rel);
  }
  if (doc.contains("results")) {
    for (const auto& item : doc["results"]) {
      ReportGraph rg;
      for (const auto& node : item.at("nodes"))
        rg.nodes.emplace_back(node.at("id").get<std::string>(),
                              node.at("label").get<std::string>());
      for (const auto& edge : item.at("edges"))
        rg.edges.emplace_back(edge.at("src").get<std::string>(),
                              edge.at("dst").get<std::string>());
      report.results.push_back(std::move(rg));
    }
  }
  if (doc.contains("embeddings")) {
    if (report.semantics != Semantics::iso)
      throw ParseError("report: 'embeddings' is only valid for iso");
    for (const auto& item : doc["embeddings"]) {
      std::vector<std::pair<std::string, std::string>> mapping;
      for (const auto& [pattern_id, data_id] : item.items())
        mapping.emplace_back(pattern_id, data_id.get<std::string>());
      std::sort(mapping.begin(), mapping.end());
      report.embeddings.push_back(std::move(mapping));
    }
  }
  if (doc.contains("stats")) {
    const auto& s = doc["stats"];
    ReportStats stats;
    stats.passes = s.at("passes").get<long>();
    stats.lr_checks = s.at("lr_checks").get<long>();
    stats.augmenting_paths = s.at("augmenting_paths").get<long>();
    stats.removals = s.at("removals").get<long>();
    stats.wall_ms = s.at("wall_ms").get<double>();
    report.stats = stats;
  }
  return report;
}

std::string MatchReport::to_table() const {
  std::ostringstream out;
  out << "semantics: " << to_string(semantics) << '\n';
  out << "matched: " << (matched ? "yes" : "no") << '\n';
  if (relation) {
    out << "relation:\n";
    for (const auto& [pattern_id, data_ids] : *relation) {
      out << "  " << pattern_id << " ->";
      for (const std::string& id : data_ids) out << ' ' << id;
      out << '\n';
    }
  }
  if (semantics == Semantics::iso) {
    out << "embeddings: " << embeddings.size() << '\n';
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
      out << "  embedding " << i + 1 << ":";
      for (const auto& [pattern_id, data_id] : embeddings[i])
        out << ' ' << pattern_id << '=' << data_id;
      out << '\n';
    }
  } else {
    out << "results: " << results.size() << '\n';
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << "  result " << i + 1 << ": " << results[i].nodes.size() << " nodes, "
          << results[i].edges.size() << " edges\n";
      for (const auto& [id, label] : results[i].nodes)
        out << "    node " << id << ' ' << label << '\n';
      for (const auto& [src, dst] : results[i].edges)
        out << "    edge " << src << ' ' << dst << '\n';
    }
  }
  if (stats) {
    out << "stats: passes=" << stats->passes << " lr_checks=" << stats->lr_checks
        << " augmenting_paths=" << stats->augmenting_paths
        << " removals=" << stats->removals << " wall_ms=" << stats->wall_ms << '\n';
  }
  return out.str();
}

std::string MatchReport::to_dot() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < results.size(); ++i) {
    out << "digraph result_" << i + 1 << " {\n";
    for (const auto& [id, label] : results[i].nodes)
      out << "  \"" << id << "\" [label=\"" << id << ':' << label << "\"];\n";
    for (const auto& [src, dst] : results[i].edges)
      out << "  \"" << src << "\" -> \"" << dst << "\";\n";
    out << "}\n";
  }
  return out.str();
}

}  // namespace tsim
