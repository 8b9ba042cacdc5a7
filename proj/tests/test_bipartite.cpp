#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "tsim/bipartite.hpp"
#include "tsim/error.hpp"
#include "tsim/generator.hpp"
#include "tsim/oracle.hpp"

using namespace tsim;

TEST_CASE("BipartiteGraph separates the two id spaces") {
  BipartiteGraph bg;
  int x0 = bg.add_left("a");
  int x1 = bg.add_left("a");  // duplicate left ids are fine: one slot each
  CHECK(x0 == 0);
  CHECK(x1 == 1);
  int y0 = bg.ensure_right("a");  // same string as a left id, different space
  int y1 = bg.ensure_right("b");
  CHECK(bg.ensure_right("b") == y1);
  CHECK(bg.left_count() == 2);
  CHECK(bg.right_count() == 2);
  CHECK(bg.find_right("b").has_value());
  CHECK_FALSE(bg.find_right("zz").has_value());

  bg.add_edge(x0, y0);
  bg.add_edge(x0, y1);
  bg.add_edge(x0, y1);  // duplicate edge is dropped
  CHECK(bg.edge_count() == 2);
  CHECK(bg.adjacent(x0) == std::vector<int>{y0, y1});
  CHECK(bg.adjacent(x1).empty());
}

TEST_CASE("maximum matching on hand-sized graphs") {
  BipartiteGraph bg;
  for (int i = 0; i < 3; ++i) bg.add_left("x" + std::to_string(i));
  for (int j = 0; j < 3; ++j) bg.ensure_right("y" + std::to_string(j));
  // x0 - {y0, y1}, x1 - {y0}, x2 - {y2}: perfect matching exists.
  bg.add_edge(0, 0);
  bg.add_edge(0, 1);
  bg.add_edge(1, 0);
  bg.add_edge(2, 2);

  MatchingStats stats;
  Matching m = maximum_matching(bg, &stats);
  CHECK(m.size() == 3);
  CHECK(stats.augmenting_paths == 3);
  CHECK(has_complete_matching(bg));

  // Pairs come out in ascending left order.
  REQUIRE(m.pairs.size() == 3);
  CHECK(m.pairs[0].first == 0);
  CHECK(m.pairs[1].first == 1);
  CHECK(m.pairs[2].first == 2);
}

TEST_CASE("complete matching fails when a left node is isolated") {
  BipartiteGraph bg;
  bg.add_left("x0");
  bg.add_left("x1");
  bg.ensure_right("y0");
  bg.add_edge(0, 0);
  CHECK(maximum_matching(bg).size() == 1);
  CHECK_FALSE(has_complete_matching(bg));
}

TEST_CASE("empty left side is vacuously matched") {
  BipartiteGraph bg;
  bg.ensure_right("y0");
  CHECK(has_complete_matching(bg));
  CHECK(maximum_matching(bg).size() == 0);
}

TEST_CASE("two columns cannot share one witness") {
  BipartiteGraph bg;
  bg.add_left("u");
  bg.add_left("u~2");
  bg.ensure_right("w");
  bg.add_edge(0, 0);
  bg.add_edge(1, 0);
  CHECK(maximum_matching(bg).size() == 1);
  CHECK_FALSE(has_complete_matching(bg));
}

TEST_CASE("matching is deterministic") {
  Rng rng(21);
  BipartiteGraph bg = random_bipartite(rng, 8, 8, 20);
  Matching first = maximum_matching(bg);
  Matching second = maximum_matching(bg);
  CHECK(first.pairs == second.pairs);
  for (std::size_t i = 1; i < first.pairs.size(); ++i)
    CHECK(first.pairs[i - 1].first < first.pairs[i].first);
}

TEST_CASE("Hopcroft-Karp agrees with exhaustive matching") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed);
    BipartiteGraph bg = random_bipartite(rng, 6, 6, 18);
    CAPTURE(seed);
    CHECK(static_cast<int>(maximum_matching(bg).size()) ==
          brute_force_matching_size(bg));
  }
}

TEST_CASE("complete matching agrees with Hall's condition") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    Rng rng(seed + 1000);
    BipartiteGraph bg = random_bipartite(rng, 7, 7, 20);
    CAPTURE(seed);
    CHECK(has_complete_matching(bg) == hall_condition(bg));
  }
}

TEST_CASE("matching pairs are actual edges and injective") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed + 2000);
    BipartiteGraph bg = random_bipartite(rng, 8, 8, 20);
    Matching m = maximum_matching(bg);
    std::vector<char> left_used(bg.left_count(), 0);
    std::vector<char> right_used(bg.right_count(), 0);
    for (const auto& [x, y] : m.pairs) {
      CAPTURE(seed);
      const auto& adj = bg.adjacent(x);
      CHECK(std::count(adj.begin(), adj.end(), y) == 1);
      CHECK_FALSE(left_used[x]);
      CHECK_FALSE(right_used[y]);
      left_used[x] = 1;
      right_used[y] = 1;
    }
  }
}

TEST_CASE("DOT rendering mentions every node") {
  BipartiteGraph bg;
  bg.add_left("u");
  bg.ensure_right("w");
  bg.add_edge(0, 0);
  std::string dot = bg.to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("u") != std::string::npos);
  CHECK(dot.find("w") != std::string::npos);
}

TEST_CASE("oracle guards reject oversized inputs") {
  BipartiteGraph big;
  for (int i = 0; i < 3; ++i) big.add_left("x" + std::to_string(i));
  for (int j = 0; j < 7; ++j) big.ensure_right("y" + std::to_string(j));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 7; ++j) big.add_edge(i, j);  // 21 edges, guard is 20
  CHECK_THROWS_AS(brute_force_matching_size(big), OversizeError);

  BipartiteGraph wide;
  for (int i = 0; i < 11; ++i) wide.add_left("x" + std::to_string(i));
  CHECK_THROWS_AS(hall_condition(wide), OversizeError);
}
