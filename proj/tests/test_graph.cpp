#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "tsim/error.hpp"
#include "tsim/graph.hpp"

using namespace tsim;

TEST_CASE("NodeSet keeps insertion order and survives erasure") {
  NodeSet set;
  CHECK(set.empty());
  set.insert(5);
  set.insert(3);
  set.insert(9);
  set.insert(3);  // duplicate is a no-op
  CHECK(set.size() == 3);
  CHECK(set.items() == std::vector<NodeId>{5, 3, 9});

  CHECK(set.erase(3));
  CHECK_FALSE(set.erase(3));
  CHECK_FALSE(set.contains(3));
  CHECK(set.items() == std::vector<NodeId>{5, 9});

  set.insert(3);
  CHECK(set.items() == std::vector<NodeId>{5, 9, 3});
}

TEST_CASE("NodeSet equality ignores order") {
  NodeSet a;
  a.insert(1);
  a.insert(2);
  NodeSet b;
  b.insert(2);
  b.insert(1);
  CHECK(a == b);
  b.insert(7);
  CHECK_FALSE(a == b);
}

TEST_CASE("GraphBuilder validates nodes and edges") {
  GraphBuilder builder;
  builder.add_node("a", "X");
  CHECK_THROWS_AS(builder.add_node("a", "Y"), InvalidInputError);
  CHECK_THROWS_AS(builder.add_node("", "X"), InvalidInputError);
  CHECK_THROWS_AS(builder.add_node("b c", "X"), InvalidInputError);
  CHECK_THROWS_AS(builder.add_node("b", "two words"), InvalidInputError);
  CHECK_THROWS_AS(builder.add_node("b#", "X"), InvalidInputError);

  builder.add_node("b", "Y");
  builder.add_edge("a", "b");
  CHECK_THROWS_AS(builder.add_edge("a", "b"), InvalidInputError);
  CHECK_THROWS_AS(builder.add_edge("a", "zz"), InvalidInputError);

  Graph g = builder.build();
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.label(g.node("a")) == "X");
  CHECK(g.has_edge(g.node("a"), g.node("b")));
  CHECK_FALSE(g.has_edge(g.node("b"), g.node("a")));
  CHECK_FALSE(g.find_node("zz").has_value());
  CHECK_THROWS_AS(g.node("zz"), InvalidInputError);
}

TEST_CASE("Graph exposes label buckets and adjacency") {
  GraphBuilder builder;
  builder.add_node("a", "X");
  builder.add_node("b", "Y");
  builder.add_node("c", "X");
  builder.add_edge("a", "b");
  builder.add_edge("c", "b");
  Graph g = builder.build();

  CHECK(g.has_label("X"));
  CHECK_FALSE(g.has_label("Z"));
  CHECK(g.nodes_with_label("X").size() == 2);
  CHECK(g.nodes_with_label("Z").empty());
  CHECK(g.children(g.node("a")) == std::vector<NodeId>{g.node("b")});
  CHECK(g.parents(g.node("b")).size() == 2);
  CHECK(neighbors(g, g.node("b"), Direction::parent).size() == 2);
  CHECK(neighbors(g, g.node("b"), Direction::child).empty());
}

TEST_CASE("PatternBuilder normalizes quantifiers and rejects bad ones") {
  PatternBuilder builder;
  builder.add_node("u", "X");
  builder.add_node("v", "Y");
  builder.add_edge("u", "v", 1);  // ">=1" means a plain edge
  PatternGraph q = builder.build();
  CHECK_FALSE(q.is_quantified());
  CHECK(q.quantifier(q.graph().node("u"), q.graph().node("v")) == 1);
  CHECK(q.quantified_edges().empty());

  PatternBuilder bad;
  bad.add_node("u", "X");
  bad.add_node("v", "Y");
  CHECK_THROWS_AS(bad.add_edge("u", "v", 0), InvalidInputError);
  CHECK_THROWS_AS(bad.add_edge("u", "v", -3), InvalidInputError);
}

TEST_CASE("PatternBuilder requires connectivity") {
  PatternBuilder builder;
  builder.add_node("u", "X");
  builder.add_node("v", "Y");
  builder.add_node("w", "Z");
  builder.add_edge("u", "v");
  CHECK_THROWS_AS(builder.build(), InvalidInputError);

  PatternBuilder empty;
  CHECK_THROWS_AS(empty.build(), InvalidInputError);

  PatternBuilder single;
  single.add_node("u", "X");
  CHECK_NOTHROW(single.build());
}

TEST_CASE("quantifier accessor rejects non-edges") {
  PatternBuilder builder;
  builder.add_node("u", "X");
  builder.add_node("v", "Y");
  builder.add_edge("u", "v", 3);
  PatternGraph q = builder.build();
  CHECK(q.is_quantified());
  CHECK(q.quantifier(q.graph().node("u"), q.graph().node("v")) == 3);
  CHECK_THROWS_AS(q.quantifier(q.graph().node("v"), q.graph().node("u")),
                  InvalidInputError);
  auto edges = q.quantified_edges();
  REQUIRE(edges.size() == 1);
  CHECK(std::get<2>(edges[0]) == 3);
}

TEST_CASE("undirected distance and diameter") {
  GraphBuilder builder;
  builder.add_node("a", "X");
  builder.add_node("b", "X");
  builder.add_node("c", "X");
  builder.add_node("d", "X");
  builder.add_edge("a", "b");
  builder.add_edge("c", "b");  // edges count both ways for distance
  builder.add_edge("c", "d");
  Graph g = builder.build();

  CHECK(undirected_distance(g, g.node("a"), g.node("a")) == 0);
  CHECK(undirected_distance(g, g.node("a"), g.node("b")) == 1);
  CHECK(undirected_distance(g, g.node("a"), g.node("d")) == 3);
  CHECK(diameter(g) == 3);

  GraphBuilder two;
  two.add_node("a", "X");
  two.add_node("b", "X");
  Graph disconnected = two.build();
  CHECK_FALSE(
      undirected_distance(disconnected, disconnected.node("a"), disconnected.node("b"))
          .has_value());
  CHECK_THROWS_AS(diameter(disconnected), InvalidInputError);
}

TEST_CASE("potential matches are the label buckets") {
  PatternBuilder pb;
  pb.add_node("u", "X");
  pb.add_node("v", "Y");
  pb.add_edge("u", "v");
  PatternGraph q = pb.build();

  GraphBuilder gb;
  gb.add_node("a", "X");
  gb.add_node("b", "Y");
  gb.add_node("c", "X");
  gb.add_edge("a", "b");
  gb.add_edge("c", "b");
  Graph g = gb.build();

  NodeSet for_u = potential_matches(q, g, q.graph().node("u"));
  CHECK(for_u.size() == 2);
  CHECK(for_u.contains(g.node("a")));
  CHECK(for_u.contains(g.node("c")));
  NodeSet for_v = potential_matches(q, g, q.graph().node("v"));
  CHECK(for_v.items() == std::vector<NodeId>{g.node("b")});
}
