// Command line front end: match runs one semantics over a pattern/data pair,
// bench runs the scaling harness, oracle runs the exhaustive references.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tsim/bench.hpp"
#include "tsim/error.hpp"
#include "tsim/io.hpp"
#include "tsim/oracle.hpp"
#include "tsim/report.hpp"
#include "tsim/simulation.hpp"

namespace {

struct MatchArgs {
  std::string semantics = "triple";
  std::string pattern_path;
  std::string data_path;
  std::string format = "json";
  bool stats = false;
  bool no_center_prune = false;
  std::string bipartite_dump_path;
};

struct BenchArgs {
  std::string config_path;
  std::string output_path;
};

struct OracleArgs {
  std::string kind;
  std::string pattern_path;
  std::string data_path;
  std::string format = "json";
};

int print_report(const tsim::MatchReport& report, const std::string& format) {
  if (format == "json")
    std::cout << report.to_json();
  else if (format == "table")
    std::cout << report.to_table();
  else if (format == "dot")
    std::cout << report.to_dot();
  else
    throw tsim::InvalidInputError("unknown format '" + format + "'");
  return report.matched ? tsim::kExitMatched : tsim::kExitEmpty;
}

int run_match_command(const MatchArgs& args) {
  tsim::PatternGraph pattern = tsim::load_pattern_graph(args.pattern_path);
  tsim::Graph data = tsim::load_data_graph(args.data_path);

  tsim::RunOptions options;
  options.with_stats = args.stats;
  options.center_prune = !args.no_center_prune;
  std::ofstream dump;
  if (!args.bipartite_dump_path.empty()) {
    dump.open(args.bipartite_dump_path);
    if (!dump)
      throw tsim::InvalidInputError("cannot open '" + args.bipartite_dump_path +
                                    "' for writing");
    options.bipartite_dump = &dump;
  }

  tsim::Semantics semantics = tsim::semantics_from_string(args.semantics);
  tsim::MatchReport report = tsim::run_match(semantics, pattern, data, options);
  return print_report(report, args.format);
}

int run_bench_command(const BenchArgs& args) {
  std::ifstream in(args.config_path);
  if (!in)
    throw tsim::ParseError(args.config_path + ": cannot open file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  tsim::BenchConfig config = tsim::BenchConfig::from_json(text);

  std::vector<tsim::BenchRow> rows = tsim::run_bench(config);
  std::string csv = tsim::bench_csv_header();
  for (const tsim::BenchRow& row : rows) csv += tsim::to_csv_row(row);

  if (args.output_path.empty()) {
    std::cout << csv;
  } else {
    std::ofstream out(args.output_path);
    if (!out)
      throw tsim::InvalidInputError("cannot open '" + args.output_path +
                                    "' for writing");
    out << csv;
  }
  return tsim::kExitMatched;
}

int run_oracle_command(const OracleArgs& args) {
  tsim::PatternGraph pattern = tsim::load_pattern_graph(args.pattern_path);
  tsim::Graph data = tsim::load_data_graph(args.data_path);

  if (args.kind == "iso") {
    tsim::MatchReport report =
        tsim::run_match(tsim::Semantics::iso, pattern, data);
    return print_report(report, args.format);
  }
  if (args.kind == "triple") {
    std::optional<tsim::SimRelation> relation =
        tsim::brute_force_triple_relation(pattern, data);
    tsim::MatchReport report;
    report.semantics = tsim::Semantics::triple;
    report.matched = relation.has_value();
    if (relation) {
      std::vector<std::pair<std::string, std::vector<std::string>>> rel;
      for (tsim::NodeId u = 0;
           static_cast<std::size_t>(u) < relation->pattern_size(); ++u) {
        std::vector<std::string> ids;
        for (tsim::NodeId v : relation->at(u).items()) ids.push_back(data.id(v));
        std::sort(ids.begin(), ids.end());
        rel.emplace_back(pattern.graph().id(u), std::move(ids));
      }
      std::sort(rel.begin(), rel.end());
      report.relation = std::move(rel);

      tsim::MatchResult result = tsim::build_match_result(pattern, data, *relation);
      tsim::ReportGraph rg;
      const tsim::Graph& sub = result.graph;
      for (tsim::NodeId v = 0; static_cast<std::size_t>(v) < sub.node_count(); ++v)
        rg.nodes.emplace_back(sub.id(v), sub.label(v));
      std::sort(rg.nodes.begin(), rg.nodes.end());
      for (const auto& [src, dst] : sub.edges())
        rg.edges.emplace_back(sub.id(src), sub.id(dst));
      std::sort(rg.edges.begin(), rg.edges.end());
      report.results.push_back(std::move(rg));
    }
    return print_report(report, args.format);
  }
  throw tsim::InvalidInputError("unknown oracle '" + args.kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph pattern matching with triple simulation"};
  app.require_subcommand(1);

  MatchArgs match_args;
  CLI::App* match = app.add_subcommand("match", "Match a pattern against a data graph");
  match->add_option("-s,--semantics", match_args.semantics,
                    "sim, dual, strong, triple, triple-local or iso")
      ->capture_default_str();
  match->add_option("-q,--pattern", match_args.pattern_path, "Pattern graph file")
      ->required();
  match->add_option("-g,--data", match_args.data_path, "Data graph file")->required();
  match->add_option("-f,--format", match_args.format, "json, table or dot")
      ->capture_default_str();
  match->add_flag("--stats", match_args.stats, "Include counters and wall time");
  match->add_flag("--no-center-prune", match_args.no_center_prune,
                  "Keep balls whose center label is absent from the pattern "
                  "(triple-local only)");
  match->add_option("--dump-bipartite", match_args.bipartite_dump_path,
                    "Write every label-repetition bipartite graph as DOT to this file");

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run the scaling benchmark harness");
  bench->add_option("-c,--config", bench_args.config_path, "Bench config JSON")
      ->required();
  bench->add_option("-o,--output", bench_args.output_path,
                    "CSV output path (default: stdout)");

  OracleArgs oracle_args;
  CLI::App* oracle = app.add_subcommand("oracle", "Run an exhaustive reference check");
  oracle->add_option("kind", oracle_args.kind, "iso or triple")->required();
  oracle->add_option("-q,--pattern", oracle_args.pattern_path, "Pattern graph file")
      ->required();
  oracle->add_option("-g,--data", oracle_args.data_path, "Data graph file")->required();
  oracle->add_option("-f,--format", oracle_args.format, "json, table or dot")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : tsim::kExitError;
  }

  try {
    if (match->parsed()) return run_match_command(match_args);
    if (bench->parsed()) return run_bench_command(bench_args);
    if (oracle->parsed()) return run_oracle_command(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return tsim::kExitError;
  }
  return tsim::kExitError;
}
