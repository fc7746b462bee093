#include <doctest.h>

#include "gem/colored_graph.hpp"

using namespace gem;

namespace {

ColoredGraph square01() {
  // 4-cycle alternating colors 0/1
  return ColoredGraph::build(2, {"a", "b", "c", "d"},
                             {{"a", "b", 0}, {"b", "c", 1}, {"c", "d", 0}, {"d", "a", 1}});
}

ColoredGraph triangle() {
  // properly colored odd cycle: not bipartite
  return ColoredGraph::build(3, {"a", "b", "c"}, {{"a", "b", 0}, {"b", "c", 1}, {"c", "a", 2}});
}

}  // namespace

TEST_CASE("construction rejects bad edges") {
  CHECK_THROWS_WITH_AS(ColoredGraph::build(2, {"a"}, {{"a", "a", 0}}), doctest::Contains("LoopEdge"),
                       Error);
  CHECK_THROWS_AS(ColoredGraph::build(2, {"a", "b", "c"}, {{"a", "b", 0}, {"a", "c", 0}}), Error);
  try {
    ColoredGraph::build(2, {"a", "b", "c"}, {{"a", "b", 0}, {"a", "c", 0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ColorClash);
  }
  CHECK_THROWS_AS(ColoredGraph::build(2, {"a", "b"}, {{"a", "b", 2}}), Error);
  CHECK_THROWS_AS(ColoredGraph::build(2, {"a", "b"}, {{"a", "z", 0}}), Error);
}

TEST_CASE("adjacency and edge list") {
  auto g = square01();
  CHECK(g.vertex_count() == 4);
  CHECK(g.color_count() == 2);
  CHECK(g.neighbor(0, 0) == 1);
  CHECK(g.neighbor(0, 1) == 3);
  CHECK(g.degree(0) == 2);
  CHECK(g.edge_count() == 4);
  auto es = g.edges();
  CHECK(es.front() == Edge{0, 1, 0});
  CHECK(std::is_sorted(es.begin(), es.end()));
  CHECK(g.index_of("c") == 2);
  CHECK(g.index_of("nope") == -1);
  CHECK(g.is_regular());
  CHECK(g.is_connected());
}

TEST_CASE("residues") {
  auto g = square01();
  CHECK(residues(g, {0, 1}).count() == 1);
  CHECK(residues(g, {0}).count() == 2);
  CHECK(residues(g, {}).count() == 4);
  CHECK(pair_residue_count(g, 0, 1) == 1);
  // components ordered by least vertex, each sorted
  auto r = residues(g, {0});
  CHECK(r.components[0] == std::vector<int>{0, 1});
  CHECK(r.components[1] == std::vector<int>{2, 3});
}

TEST_CASE("bipartiteness") {
  auto g = square01();
  auto bip = is_bipartite(g);
  CHECK(bip.bipartite);
  CHECK(bip.vertex_class[0] == 0);
  CHECK(bip.vertex_class[1] == 1);
  CHECK_FALSE(is_bipartite(triangle()).bipartite);
}

TEST_CASE("contractedness") {
  // dropping color 0 from the square disconnects it
  CHECK_FALSE(is_contracted(square01()));
  auto sphere2 = ColoredGraph::build(3, {"x0", "x1"},
                                     {{"x0", "x1", 0}, {"x0", "x1", 1}, {"x0", "x1", 2}});
  CHECK(is_contracted(sphere2));
  // non-regular input is rejected
  auto path = ColoredGraph::build(2, {"a", "b"}, {{"a", "b", 0}});
  CHECK_THROWS_AS(is_contracted(path), Error);
}

TEST_CASE("boundary graph of an alternating path") {
  // a -0- b -1- c -0- d: boundary vertices a, d miss color 1
  auto g = ColoredGraph::build(2, {"a", "b", "c", "d"},
                               {{"a", "b", 0}, {"b", "c", 1}, {"c", "d", 0}});
  auto bd = boundary_graph(g);
  CHECK(bd.graph.vertex_count() == 2);
  CHECK(bd.graph.edges() == std::vector<Edge>{{0, 1, 0}});
  REQUIRE(bd.components.size() == 1);
  CHECK(bd.missing_color[0] == 1);
}

TEST_CASE("boundary graph rejects low-degree vertices") {
  auto g = ColoredGraph::build(3, {"a", "b"}, {{"a", "b", 0}});  // degree n-2
  CHECK_THROWS_AS(boundary_graph(g), Error);
}
