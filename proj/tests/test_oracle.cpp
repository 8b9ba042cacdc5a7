#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tsim/error.hpp"
#include "tsim/generator.hpp"
#include "tsim/io.hpp"
#include "tsim/oracle.hpp"
#include "tsim/triple.hpp"

using namespace tsim;

namespace {

std::string fixture(const std::string& name) {
  return std::string(TSIM_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("isomorphism enumeration on the hiring fixtures") {
  PatternGraph q2 = load_pattern_graph(fixture("recommendation_q2.graph"));
  Graph g2 = load_data_graph(fixture("recommendation_g2.graph"));
  std::vector<IsoEmbedding> embeddings = enumerate_isomorphisms(q2, g2);
  REQUIRE(embeddings.size() == 1);
  const Graph& pat = q2.graph();
  const IsoEmbedding& e = embeddings[0];
  CHECK(g2.id(e.image[pat.node("q1")]) == "d1");
  CHECK(g2.id(e.image[pat.node("q2")]) == "d3");
  CHECK(g2.id(e.image[pat.node("q4")]) == "d4");
  CHECK(g2.id(e.image[pat.node("q5")]) == "d5");
  CHECK(g2.id(e.image[pat.node("q6")]) == "d6");
}

TEST_CASE("embeddings are injective and edge preserving") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed + 1500);
    PatternGraph q = random_pattern(rng, rng.range(1, 4), 2, 1);
    Graph g = random_data_graph(rng, rng.range(1, 9), 2, 2.5);
    CAPTURE(seed);

    for (const IsoEmbedding& e : enumerate_isomorphisms(q, g)) {
      std::set<NodeId> image(e.image.begin(), e.image.end());
      CHECK(image.size() == e.image.size());
      for (NodeId u = 0; static_cast<std::size_t>(u) < e.image.size(); ++u)
        CHECK(q.graph().label(u) == g.label(e.image[u]));
      for (const auto& [src, dst] : q.graph().edges())
        CHECK(g.has_edge(e.image[src], e.image[dst]));
    }
  }
}

TEST_CASE("iso guards and quantifier rejection") {
  PatternGraph q7 = load_pattern_graph(fixture("thesis_q.graph"));  // 7 nodes
  Graph small = load_data_graph(fixture("thesis_g1.graph"));
  CHECK_THROWS_AS(enumerate_isomorphisms(q7, small), OversizeError);

  PatternGraph quant = load_pattern_graph(fixture("quant_q.graph"));
  Graph qg = load_data_graph(fixture("quant_g1.graph"));
  CHECK_THROWS_AS(enumerate_isomorphisms(quant, qg), UnsupportedError);

  Rng rng(3);
  PatternGraph q = random_pattern(rng, 3, 2, 1);
  Graph big = random_data_graph(rng, 15, 2, 2.0);  // data guard is 14
  CHECK_THROWS_AS(enumerate_isomorphisms(q, big), OversizeError);
  CHECK_THROWS_AS(brute_force_triple_relation(q, big), OversizeError);
}

TEST_CASE("brute force relation on the hand-built fixtures") {
  PatternGraph q = load_pattern_graph(fixture("thesis_q.graph"));
  Graph g1 = load_data_graph(fixture("thesis_g1.graph"));
  Graph g2 = load_data_graph(fixture("thesis_g2.graph"));
  CHECK_FALSE(brute_force_triple_relation(q, g1).has_value());

  auto rel = brute_force_triple_relation(q, g2);
  REQUIRE(rel.has_value());
  const Graph& pat = q.graph();
  auto ids = [&](NodeId u) {
    std::set<std::string> out;
    for (NodeId v : rel->at(u).items()) out.insert(g2.id(v));
    return out;
  };
  CHECK(ids(pat.node("q1")) == std::set<std::string>{"d1"});
  CHECK(ids(pat.node("q2")) == std::set<std::string>{"d2", "d3"});
  CHECK(ids(pat.node("q3")) == std::set<std::string>{"d4"});
  CHECK(ids(pat.node("q4")) == std::set<std::string>{"d2"});
  CHECK(ids(pat.node("q5")) == std::set<std::string>{"d5", "d7"});
  CHECK(ids(pat.node("q6")) == std::set<std::string>{"d8"});
  CHECK(ids(pat.node("q7")) == std::set<std::string>{"d6"});
}

TEST_CASE("every embedding lands inside the triple relation") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Rng rng(seed + 2500);
    PatternGraph q = random_pattern(rng, rng.range(1, 4), 2, 1);
    Graph g = random_data_graph(rng, rng.range(1, 10), 2, 3.0);
    CAPTURE(seed);

    std::vector<IsoEmbedding> embeddings = enumerate_isomorphisms(q, g);
    if (embeddings.empty()) continue;
    auto match = triple_simulation(q, g);
    REQUIRE(match.has_value());
    for (const IsoEmbedding& e : embeddings)
      for (NodeId u = 0; static_cast<std::size_t>(u) < e.image.size(); ++u)
        CHECK(match->relation.at(u).contains(e.image[u]));
  }
}

TEST_CASE("quantified brute force honors joint distinctness") {
  PatternGraph q = load_pattern_graph(fixture("quant_q.graph"));
  Graph g1 = load_data_graph(fixture("quant_g1.graph"));
  Graph g2 = load_data_graph(fixture("quant_g2.graph"));
  CHECK_FALSE(brute_force_triple_relation(q, g1).has_value());
  auto rel = brute_force_triple_relation(q, g2);
  REQUIRE(rel.has_value());
  std::set<std::string> b_nodes;
  for (NodeId v : rel->at(q.graph().node("q2")).items()) b_nodes.insert(g2.id(v));
  CHECK(b_nodes == std::set<std::string>{"d3", "d7"});
}
