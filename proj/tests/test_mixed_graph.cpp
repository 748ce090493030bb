#include "hk/mixed_graph.hpp"

#include <numeric>
#include <stdexcept>

#include "doctest.h"

using namespace hk;

TEST_CASE("parsing the graph format") {
  MixedGraph g = parse_graph("vertices 2\n1 -- 2\n");
  CHECK(g.n == 2);
  CHECK(g.has_unoriented(1, 2));

  g = parse_graph("# comment\nvertices 2\n1 -> 2  # trailing\n");
  CHECK(g.has_arrow(1, 2));
  CHECK_FALSE(g.has_arrow(2, 1));

  g = parse_graph("vertices 3\n1 <- 2\n");
  CHECK(g.has_arrow(2, 1));

  CHECK_THROWS_WITH_AS(parse_graph("vertices 2\n1 -> 1\n"), "line 2: loop edge",
                       std::runtime_error);
  CHECK_THROWS_AS(parse_graph("vertices 2\n1 -- 2\n2 -> 1\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_graph("vertices 2\n1 -- 3\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_graph("vertices 2\n1 ~ 2\n"), std::runtime_error);
  CHECK_THROWS_AS(parse_graph("1 -- 2\n"), std::runtime_error);
}

TEST_CASE("opposite reverses arrows and is an involution") {
  MixedGraph g = parse_graph("vertices 3\n1 -> 2\n2 -- 3\n");
  MixedGraph o = opposite(g);
  CHECK(o.has_arrow(2, 1));
  CHECK(o.has_unoriented(2, 3));
  CHECK(opposite(o) == g);

  for (const MixedGraph& h : enumerate_mixed_graphs(3)) CHECK(opposite(opposite(h)) == h);
}

TEST_CASE("graph isomorphism") {
  MixedGraph a = parse_graph("vertices 2\n1 -> 2\n");
  MixedGraph b = parse_graph("vertices 2\n2 -> 1\n");
  auto f = are_graphs_isomorphic(a, b);
  REQUIRE(f);
  CHECK(*f == std::vector<int>{2, 1});

  CHECK_FALSE(are_graphs_isomorphic(a, parse_graph("vertices 2\n1 -- 2\n")));

  // identity on self, lexicographically least bijection
  for (const MixedGraph& g : enumerate_mixed_graphs(3)) {
    auto self = are_graphs_isomorphic(g, g);
    REQUIRE(self);
    std::vector<int> id(g.n);
    std::iota(id.begin(), id.end(), 1);
    CHECK(*self == id);
  }
}

TEST_CASE("class enumeration counts and pairwise distinction") {
  CHECK(enumerate_mixed_graphs(1).size() == 1);
  CHECK(enumerate_mixed_graphs(2).size() == 3);
  auto c3 = enumerate_mixed_graphs(3);
  CHECK(c3.size() == 16);
  CHECK(enumerate_mixed_graphs(4).size() == 218);

  for (size_t i = 0; i < c3.size(); ++i)
    for (size_t j = 0; j < c3.size(); ++j)
      CHECK(are_graphs_isomorphic(c3[i], c3[j]).has_value() == (i == j));

  // canonical representatives are fixed by canonicalization
  for (const MixedGraph& g : c3) CHECK(canonical_form(g) == g);
}

TEST_CASE("shape classification") {
  for (int n = 1; n <= 8; ++n) {
    GraphShape s = classify_shape(linear_path(n));
    CHECK(s.is_type_a_path);
    CHECK(s.is_linear_orientation);
    CHECK(s.is_simply_laced_dynkin_union);
    CHECK_FALSE(s.eq3_witness);
    CHECK_FALSE(s.eq3_witness_opposite);
  }

  MixedGraph vee = parse_graph("vertices 3\n1 -> 2\n3 -> 2\n");
  GraphShape s = classify_shape(vee);
  REQUIRE(s.eq3_witness);
  CHECK(*s.eq3_witness == std::array<int, 3>{1, 2, 3});
  CHECK_FALSE(s.eq3_witness_opposite);
  CHECK(classify_shape(opposite(vee)).eq3_witness_opposite.has_value());

  MixedGraph tri = parse_graph("vertices 3\n1 -- 2\n2 -- 3\n1 -- 3\n");
  CHECK_FALSE(classify_shape(tri).is_simply_laced_dynkin_union);
  CHECK_FALSE(classify_shape(tri).is_type_a_path);

  // linear orientation implies fully oriented path
  for (const MixedGraph& g : enumerate_mixed_graphs(3)) {
    GraphShape sh = classify_shape(g);
    if (sh.is_linear_orientation) {
      CHECK(sh.is_type_a_path);
      for (const auto& [key, kind] : g.edges) CHECK(kind != EdgeKind::Unoriented);
    }
  }

  // D_4 with all arrows into the center: triple point indegree 3
  MixedGraph d4 = parse_graph("vertices 4\n1 -> 2\n3 -> 2\n4 -> 2\n");
  CHECK_FALSE(classify_shape(d4).triple_point_indegree_ok);
  CHECK(classify_shape(opposite(d4)).triple_point_indegree_ok);
}

TEST_CASE("full embeddings") {
  MixedGraph p3 = path_graph(3);
  MixedGraph e1 = parse_graph("vertices 2\n1 -- 2\n");
  CHECK(is_full_embedding({1, 2}, e1, p3));
  CHECK(is_full_embedding({2, 3}, e1, p3));
  CHECK_FALSE(is_full_embedding({1, 3}, e1, p3));  // 1 and 3 not adjacent in the path

  MixedGraph edgeless2(2);
  CHECK_FALSE(is_full_embedding({1, 2}, edgeless2, p3));  // image not full
  CHECK(is_full_embedding({1, 3}, edgeless2, p3));
  CHECK_FALSE(is_full_embedding({1, 1}, edgeless2, p3));  // not injective
}

TEST_CASE("json export") {
  MixedGraph g = parse_graph("vertices 3\n1 -> 2\n2 -- 3\n");
  CHECK(graph_to_json(g) ==
        R"({"edges":[{"a":1,"b":2,"kind":"fwd"},{"a":2,"b":3,"kind":"un"}],"n":3})");
}
