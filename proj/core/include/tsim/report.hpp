#ifndef TSIM_REPORT_HPP
#define TSIM_REPORT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsim/graph.hpp"
#include "tsim/io.hpp"
#include "tsim/simulation.hpp"

namespace tsim {

// Flattened subgraph: (id, label) nodes and (src, dst) edges, both sorted
// lexicographically so reports are diff-stable.
struct ReportGraph {
  std::vector<std::pair<std::string, std::string>> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct ReportStats {
  long passes = 0;
  long lr_checks = 0;
  long augmenting_paths = 0;
  long removals = 0;
  double wall_ms = 0.0;
};

// Self-contained outcome of one match run; serializes to JSON losslessly
// (see docs/match_report.schema.json). The payload shape follows the
// semantics: the simulation family carries `relation` and `results`, iso
// carries `embeddings` plus the induced `results` subgraphs.
struct MatchReport {
  Semantics semantics = Semantics::sim;
  bool matched = false;
  // Pattern id -> sorted data ids; sorted by pattern id.
  std::optional<std::vector<std::pair<std::string, std::vector<std::string>>>> relation;
  std::vector<ReportGraph> results;
  // One entry per embedding: (pattern id, data id) sorted by pattern id.
  std::vector<std::vector<std::pair<std::string, std::string>>> embeddings;
  std::optional<ReportStats> stats;

  std::string to_json() const;
  // Parses and validates shape-vs-semantics; throws ParseError on mismatch.
  static MatchReport from_json(const std::string& text);

  std::string to_table() const;
  std::string to_dot() const;
};

struct RunOptions {
  bool with_stats = false;    // attach counters and wall time to the report
  bool center_prune = true;   // triple-local only
  std::ostream* bipartite_dump = nullptr;
};

// Runs one semantics over pattern and data and assembles the report.
MatchReport run_match(Semantics semantics, const PatternGraph& q, const Graph& g,
                      const RunOptions& options = {});

// Process exit codes shared by the CLI contract.
inline constexpr int kExitMatched = 0;
inline constexpr int kExitEmpty = 1;
inline constexpr int kExitError = 2;

}  // namespace tsim

#endif
