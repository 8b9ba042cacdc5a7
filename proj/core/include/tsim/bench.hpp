#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tsim/io.hpp"

namespace tsim {

// Scaling-run description, normally loaded from a small JSON file.
struct BenchConfig {
  std::vector<int> sizes;            // data graph node counts, one run each
  std::vector<std::uint64_t> seeds;  // one pattern + data stream per seed
  std::vector<Semantics> semantics;  // semantics to time per (seed, size)
  int label_alphabet = 4;
  double avg_degree = 3.0;
  int pattern_nodes = 6;
  int lr_siblings = 2;

  static BenchConfig from_json(const std::string& text);
};

struct BenchRow {
  std::uint64_t seed = 0;
  Semantics semantics = Semantics::triple;
  int pattern_nodes = 0;
  int data_nodes = 0;
  std::size_t data_edges = 0;
  bool matched = false;
  double wall_ms = 0.0;
  std::size_t result_nodes = 0;
  std::uint64_t result_hash = 0;  // FNV-1a over the sorted result node ids
  long passes = 0;
  long lr_checks = 0;
  long augmenting_paths = 0;
  long removals = 0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

std::string bench_csv_header();
std::string to_csv_row(const BenchRow& row);

}  // namespace tsim
