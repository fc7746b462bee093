#include <doctest.h>

#include "gem/catalog.hpp"
#include "gem/serialize.hpp"

using namespace gem;

TEST_CASE("two-vertex document is the expected text") {
  CHECK(encode(sphere(2).graph) ==
        "{\"colors\": 3, \"vertices\": [\"x0\", \"x1\"], "
        "\"edges\": [[0, 1, 0], [0, 1, 1], [0, 1, 2]]}\n");
}

TEST_CASE("round trips are bit-exact") {
  std::vector<ColoredGraph> graphs = {sphere(4).graph, lens(3).graph, projective(3).graph,
                                      surface(SurfaceKind::Genus2).graph,
                                      sphere_bundle(4, false).graph};
  for (const auto& g : graphs) {
    auto text = encode(g);
    auto back = decode(text);
    CHECK(encode(back) == text);
    CHECK(back.edges() == g.edges());
    CHECK(back.vertex_names() == g.vertex_names());
  }
}

TEST_CASE("decode rejects malformed and invalid documents") {
  CHECK_THROWS_AS(decode("not json"), Error);
  try {
    decode("not json");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ParseError);
  }
  // proper-coloring violation: two color-0 edges at vertex 0
  CHECK_THROWS_AS(
      decode(R"({"colors": 1, "vertices": ["a", "b", "c"], "edges": [[0,1,0],[0,2,0]]})"), Error);
  // color out of range
  CHECK_THROWS_AS(decode(R"({"colors": 1, "vertices": ["a", "b"], "edges": [[0,1,3]]})"), Error);
  // missing field
  CHECK_THROWS_AS(decode(R"({"vertices": [], "edges": []})"), Error);
}

TEST_CASE("isomorphism documents round trip") {
  auto e = lens(2);
  const auto& iso = e.shift_isomorphisms.front();
  auto text = encode_isomorphism(e.graph, iso);
  auto back = decode_isomorphism(e.graph, text);
  CHECK(back == iso);
  // a non-isomorphism document is rejected
  auto broken = iso;
  std::swap(broken.vertex_map[0], broken.vertex_map[1]);
  CHECK_THROWS_AS(decode_isomorphism(e.graph, encode_isomorphism(e.graph, broken)), Error);
}

TEST_CASE("dot export") {
  auto g = lens(2).graph;
  auto dot = export_dot(g);
  CHECK(dot.find("graph") == 0);
  CHECK(dot.find("x0") != std::string::npos);
  // one edge statement per edge
  size_t count = 0;
  for (size_t at = dot.find(" -- "); at != std::string::npos; at = dot.find(" -- ", at + 1)) ++count;
  CHECK(count == (size_t)g.edge_count());
  // layout hint only with a permutation
  auto ordered = export_dot(g, CyclicPermutation::canonical({0, 2, 1, 3}));
  CHECK(ordered.size() >= dot.size());
}
