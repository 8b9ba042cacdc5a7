#include "tsim/bench.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tsim/error.hpp"
#include "tsim/generator.hpp"
#include "tsim/report.hpp"

namespace tsim {

namespace {

constexpr std::uint64_t kSeedMix = 0x9E3779B97F4A7C15ULL;

std::uint64_t fnv1a(const std::vector<std::string>& parts) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (const std::string& part : parts) {
    for (unsigned char c : part) {
      hash ^= c;
      hash *= 1099511628211ULL;
    }
    hash ^= static_cast<unsigned char>('\n');
    hash *= 1099511628211ULL;
  }
  return hash;
}

void require_keys(const nlohmann::json& doc,
                  const std::set<std::string>& allowed) {
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ParseError("bench config: unknown key '" + key + "'");
  }
}

}  // namespace

BenchConfig BenchConfig::from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bench config: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("bench config: expected a JSON object");
  require_keys(doc, {"sizes", "seeds", "semantics", "label_alphabet",
                     "avg_degree", "pattern_nodes", "lr_siblings"});

  BenchConfig config;
  if (!doc.contains("sizes") || !doc["sizes"].is_array() || doc["sizes"].empty())
    throw ParseError("bench config: 'sizes' must be a non-empty array");
  for (const auto& item : doc["sizes"]) {
    if (!item.is_number_integer() || item.get<int>() < 1)
      throw ParseError("bench config: sizes must be positive integers");
    config.sizes.push_back(item.get<int>());
  }
  if (!doc.contains("seeds") || !doc["seeds"].is_array() || doc["seeds"].empty())
    throw ParseError("bench config: 'seeds' must be a non-empty array");
  for (const auto& item : doc["seeds"]) {
    if (!item.is_number_integer() || item.get<std::int64_t>() < 0)
      throw ParseError("bench config: seeds must be non-negative integers");
    config.seeds.push_back(item.get<std::uint64_t>());
  }
  if (!doc.contains("semantics") || !doc["semantics"].is_array() ||
      doc["semantics"].empty())
    throw ParseError("bench config: 'semantics' must be a non-empty array");
  for (const auto& item : doc["semantics"]) {
    if (!item.is_string())
      throw ParseError("bench config: semantics entries must be strings");
    Semantics s{};
    try {
      s = semantics_from_string(item.get<std::string>());
    } catch (const InvalidInputError& e) {
      throw ParseError(std::string("bench config: ") + e.what());
    }
    if (s == Semantics::iso)
      throw ParseError("bench config: iso is exhaustive search, not benchable here");
    config.semantics.push_back(s);
  }
  if (doc.contains("label_alphabet")) {
    config.label_alphabet = doc["label_alphabet"].get<int>();
    if (config.label_alphabet < 1 || config.label_alphabet > 8)
      throw ParseError("bench config: label_alphabet must be in [1, 8]");
  }
  if (doc.contains("avg_degree")) {
    config.avg_degree = doc["avg_degree"].get<double>();
    if (config.avg_degree <= 0)
      throw ParseError("bench config: avg_degree must be positive");
  }
  if (doc.contains("pattern_nodes")) {
    config.pattern_nodes = doc["pattern_nodes"].get<int>();
    if (config.pattern_nodes < 1)
      throw ParseError("bench config: pattern_nodes must be positive");
  }
  if (doc.contains("lr_siblings")) {
    config.lr_siblings = doc["lr_siblings"].get<int>();
    if (config.lr_siblings < 0)
      throw ParseError("bench config: lr_siblings must be non-negative");
  }
  return config;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> rows;
  for (std::uint64_t seed : config.seeds) {
    // One pattern per seed, reused across all sizes so scaling is comparable.
    Rng pattern_rng(seed);
    PatternGraph pattern = random_pattern(pattern_rng, config.pattern_nodes,
                                          config.label_alphabet, config.lr_siblings);
    for (int size : config.sizes) {
      Rng data_rng(seed * kSeedMix + static_cast<std::uint64_t>(size));
      Graph data = random_data_graph(data_rng, size, config.label_alphabet,
                                     config.avg_degree);
      for (Semantics semantics : config.semantics) {
        RunOptions options;
        options.with_stats = true;
        MatchReport report = run_match(semantics, pattern, data, options);

        BenchRow row;
        row.seed = seed;
        row.semantics = semantics;
        row.pattern_nodes = config.pattern_nodes;
        row.data_nodes = size;
        row.data_edges = data.edge_count();
        row.matched = report.matched;
        row.wall_ms = report.stats ? report.stats->wall_ms : 0.0;
        if (report.stats) {
          row.passes = report.stats->passes;
          row.lr_checks = report.stats->lr_checks;
          row.augmenting_paths = report.stats->augmenting_paths;
          row.removals = report.stats->removals;
        }
        std::set<std::string> ids;
        for (const ReportGraph& result : report.results)
          for (const auto& [id, label] : result.nodes) {
            (void)label;
            ids.insert(id);
          }
        row.result_nodes = ids.size();
        row.result_hash = fnv1a({ids.begin(), ids.end()});
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::string bench_csv_header() {
  return "seed,semantics,pattern_nodes,data_nodes,data_edges,matched,wall_ms,"
         "result_nodes,result_hash,passes,lr_checks,augmenting_paths,removals\n";
}

std::string to_csv_row(const BenchRow& row) {
  std::ostringstream out;
  out << row.seed << ',' << to_string(row.semantics) << ',' << row.pattern_nodes
      << ',' << row.data_nodes << ',' << row.data_edges << ','
      << (row.matched ? 1 : 0) << ',' << row.wall_ms << ',' << row.result_nodes
      << ',' << row.result_hash << ',' << row.passes << ',' << row.lr_checks << ','
      << row.augmenting_paths << ',' << row.removals << '\n';
  return out.str();
}

}  // namespace tsim
