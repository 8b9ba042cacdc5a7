#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "tsim/bench.hpp"
#include "tsim/error.hpp"

using namespace tsim;

namespace {

const char* kSmallConfig = R"({
  "sizes": [40, 80],
  "seeds": [7, 8],
  "semantics": ["triple", "dual"],
  "label_alphabet": 2,
  "avg_degree": 3.0,
  "pattern_nodes": 4,
  "lr_siblings": 1
})";

std::string csv_of(const std::vector<BenchRow>& rows) {
  std::string out = bench_csv_header();
  for (const BenchRow& row : rows) out += to_csv_row(row);
  return out;
}

}  // namespace

TEST_CASE("config parses with defaults") {
  BenchConfig config = BenchConfig::from_json(R"({
    "sizes": [10], "seeds": [1], "semantics": ["triple"]
  })");
  CHECK(config.sizes == std::vector<int>{10});
  CHECK(config.label_alphabet == 4);
  CHECK(config.avg_degree == doctest::Approx(3.0));
  CHECK(config.pattern_nodes == 6);
  CHECK(config.lr_siblings == 2);
}

TEST_CASE("config validation") {
  auto fails = [](const std::string& text) {
    try {
      BenchConfig::from_json(text);
      return false;
    } catch (const ParseError&) {
      return true;
    }
  };
  CHECK(fails("{"));
  CHECK(fails("[]"));
  CHECK(fails(R"({"seeds": [1], "semantics": ["triple"]})"));
  CHECK(fails(R"({"sizes": [], "seeds": [1], "semantics": ["triple"]})"));
  CHECK(fails(R"({"sizes": [0], "seeds": [1], "semantics": ["triple"]})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [], "semantics": ["triple"]})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [-1], "semantics": ["triple"]})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [1], "semantics": []})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [1], "semantics": ["warp"]})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [1], "semantics": ["triple"], "x": 1})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [1], "semantics": ["triple"],
                  "label_alphabet": 0})"));
  CHECK(fails(R"({"sizes": [10], "seeds": [1], "semantics": ["triple"],
                  "avg_degree": -1})"));
}

TEST_CASE("exhaustive search is not benchable") {
  CHECK_THROWS_AS(
      BenchConfig::from_json(R"({"sizes": [10], "seeds": [1], "semantics": ["iso"]})"),
      ParseError);
}

TEST_CASE("runs are deterministic apart from timing") {
  BenchConfig config = BenchConfig::from_json(kSmallConfig);
  std::vector<BenchRow> first = run_bench(config);
  std::vector<BenchRow> second = run_bench(config);
  REQUIRE(first.size() == second.size());
  CHECK(first.size() == 8);  // 2 seeds * 2 sizes * 2 semantics
  for (std::size_t i = 0; i < first.size(); ++i) {
    CAPTURE(i);
    CHECK(first[i].seed == second[i].seed);
    CHECK(first[i].semantics == second[i].semantics);
    CHECK(first[i].data_nodes == second[i].data_nodes);
    CHECK(first[i].data_edges == second[i].data_edges);
    CHECK(first[i].matched == second[i].matched);
    CHECK(first[i].result_nodes == second[i].result_nodes);
    CHECK(first[i].result_hash == second[i].result_hash);
    CHECK(first[i].removals == second[i].removals);
  }
}

TEST_CASE("CSV layout is stable") {
  BenchConfig config = BenchConfig::from_json(kSmallConfig);
  std::string csv = csv_of(run_bench(config));
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header ==
        "seed,semantics,pattern_nodes,data_nodes,data_edges,matched,wall_ms,"
        "result_nodes,result_hash,passes,lr_checks,augmenting_paths,removals");
  int rows = 0;
  std::string line;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 12);
  }
  CHECK(rows == 8);
}

TEST_CASE("dual rows never report LR work") {
  BenchConfig config = BenchConfig::from_json(kSmallConfig);
  for (const BenchRow& row : run_bench(config)) {
    if (row.semantics != Semantics::dual) continue;
    CHECK(row.lr_checks == 0);
    CHECK(row.augmenting_paths == 0);
  }
}
