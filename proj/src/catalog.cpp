#include "gem/catalog.hpp"

#include <algorithm>

namespace gem {

namespace {

std::vector<std::string> make_names(int count) {
  std::vector<std::string> names(count);
  for (int i = 0; i < count; ++i) names[i] = "x" + std::to_string(i);
  return names;
}

CatalogEntry finish(ColoredGraph graph, std::string family, std::string params,
                    std::string manifold) {
  CatalogEntry e{std::move(graph), std::move(family), std::move(params), std::move(manifold), {}, {}};
  if (!e.graph.is_regular() || !e.graph.is_connected() || !is_contracted(e.graph))
    throw Error(Errc::ConstructionInvalid, e.family + "(" + e.params + ") is not a crystallization");
  e.shift_isomorphisms = find_shift_isomorphisms(e.graph, 1);
  if (e.shift_isomorphisms.empty())
    throw Error(Errc::ConstructionInvalid, e.family + "(" + e.params + ") has no shift-1 isomorphism");
  auto bip = is_bipartite(e.graph);
  for (const auto& iso : e.shift_isomorphisms) {
    if (!bip.bipartite) {
      e.iso_class.push_back(IsoClass::NotBipartite);
    } else {
      e.iso_class.push_back(bip.vertex_class[iso.vertex_map[0]] == bip.vertex_class[0]
                                ? IsoClass::ClassPreserving
                                : IsoClass::ClassSwapping);
    }
  }
  return e;
}

}  // namespace

const ShiftIsomorphism* CatalogEntry::swapping() const {
  for (size_t i = 0; i < iso_class.size(); ++i)
    if (iso_class[i] == IsoClass::ClassSwapping) return &shift_isomorphisms[i];
  return nullptr;
}

const ShiftIsomorphism* CatalogEntry::preserving() const {
  for (size_t i = 0; i < iso_class.size(); ++i)
    if (iso_class[i] == IsoClass::ClassPreserving) return &shift_isomorphisms[i];
  return nullptr;
}

CatalogEntry sphere(int d) {
  if (d < 1) throw Error(Errc::BadParameter, "sphere needs d >= 1");
  std::vector<std::tuple<int, int, int>> edges;
  for (int c = 0; c <= d; ++c) edges.emplace_back(0, 1, c);
  return finish(ColoredGraph(d + 1, make_names(2), edges), "sphere", "d=" + std::to_string(d),
                "S^" + std::to_string(d));
}

CatalogEntry sphere_bundle(int d, bool orientable) {
  if (d < 3) throw Error(Errc::BadParameter, "sphere_bundle needs d >= 3");
  const int n = d + 1;
  std::vector<std::tuple<int, int, int>> edges;
  // Pair edges: x^(2i) -- x^(2i+1) by the d-1 colors i, i+1, ..., i+d-2 (mod d+1).
  for (int i = 0; i <= d; ++i)
    for (int t = 0; t <= d - 2; ++t) edges.emplace_back(2 * i, 2 * i + 1, (i + t) % n);
  // Chain edges of color i-1 (mod d+1).
  for (int i = 0; i <= d - 1; ++i) {
    int c = ((i - 1) % n + n) % n;
    edges.emplace_back(2 * i, 2 * i + 2, c);
    edges.emplace_back(2 * i + 1, 2 * i + 3, c);
  }
  // Closing edges of color d-1: straight or crossed. Straight is bipartite
  // exactly when d is odd (the 2(d+1)-cycle through the chain has even length
  // iff d+1 is even), so pick per requested orientability and confirm below.
  const bool straight = orientable ? (d % 2 == 1) : (d % 2 == 0);
  if (straight) {
    edges.emplace_back(0, 2 * d, d - 1);
    edges.emplace_back(1, 2 * d + 1, d - 1);
  } else {
    edges.emplace_back(0, 2 * d + 1, d - 1);
    edges.emplace_back(1, 2 * d, d - 1);
  }
  auto e = finish(ColoredGraph(n, make_names(2 * (d + 1)), edges), "sphere_bundle",
                  "d=" + std::to_string(d) + (orientable ? ",orientable" : ",twisted"),
                  orientable ? "S^" + std::to_string(d - 1) + " x S^1"
                             : "S^" + std::to_string(d - 1) + " ~x S^1");
  if (is_bipartite(e.graph).bipartite != orientable)
    throw Error(Errc::ConstructionInvalid, "sphere_bundle closing rule gave wrong orientability");
  return e;
}

CatalogEntry lens(int q) {
  if (q < 2) throw Error(Errc::BadParameter, "lens needs q >= 2");
  const int m = 2 * q;
  std::vector<std::tuple<int, int, int>> edges;
  for (int j = 0; j < m; ++j) {
    edges.emplace_back(j, (j + 1) % m, j % 2 == 0 ? 0 : 2);                // inner cycle
    edges.emplace_back(m + j, m + (j + 1) % m, j % 2 == 0 ? 2 : 0);        // outer cycle
    edges.emplace_back(j, m + ((j - 1 + m) % m), 1);                       // color-1 rungs
    edges.emplace_back(j, m + ((j + 1) % m), 3);                           // color-3 rungs
  }
  return finish(ColoredGraph(4, make_names(4 * q), edges), "lens", "q=" + std::to_string(q),
                "L(" + std::to_string(q) + ",1)");
}

CatalogEntry projective(int d) {
  if (d < 2) throw Error(Errc::BadParameter, "projective needs d >= 2");
  const int nv = 1 << d;
  std::vector<std::tuple<int, int, int>> edges;
  for (int x = 0; x < nv; ++x) {
    for (int j = 0; j < d; ++j) {
      int y = x ^ (1 << j);
      if (y > x) edges.emplace_back(x, y, j);
    }
    int anti = x ^ (nv - 1);
    if (anti > x) edges.emplace_back(x, anti, d);
  }
  return finish(ColoredGraph(d + 1, make_names(nv), edges), "projective", "d=" + std::to_string(d),
                "RP^" + std::to_string(d));
}

SurfaceKind surface_kind_from_string(const std::string& s) {
  if (s == "rp2") return SurfaceKind::RP2;
  if (s == "klein") return SurfaceKind::Klein;
  if (s == "torus") return SurfaceKind::Torus;
  if (s == "genus2") return SurfaceKind::Genus2;
  throw Error(Errc::BadParameter, "unknown surface kind " + s);
}

std::string to_string(SurfaceKind k) {
  switch (k) {
    case SurfaceKind::RP2: return "rp2";
    case SurfaceKind::Klein: return "klein";
    case SurfaceKind::Torus: return "torus";
    case SurfaceKind::Genus2: return "genus2";
  }
  return "?";
}

CatalogEntry surface(SurfaceKind kind) {
  int cycle = 0;
  std::vector<std::pair<int, int>> chords;
  std::string manifold;
  switch (kind) {
    case SurfaceKind::RP2:
      cycle = 4;
      chords = {{0, 2}, {1, 3}};
      manifold = "RP^2";
      break;
    case SurfaceKind::Klein:
      cycle = 6;
      chords = {{0, 3}, {1, 5}, {2, 4}};
      manifold = "RP^2 # RP^2";
      break;
    case SurfaceKind::Torus:
      cycle = 6;
      chords = {{0, 3}, {1, 4}, {2, 5}};
      manifold = "S^1 x S^1";
      break;
    case SurfaceKind::Genus2:
      cycle = 10;
      chords = {{0, 5}, {1, 8}, {2, 9}, {3, 6}, {4, 7}};
      manifold = "(S^1 x S^1) # (S^1 x S^1)";
      break;
  }
  std::vector<std::tuple<int, int, int>> edges;
  for (int j = 0; j < cycle; ++j) edges.emplace_back(j, (j + 1) % cycle, j % 2);
  for (auto [a, b] : chords) edges.emplace_back(a, b, 2);
  return finish(ColoredGraph(3, make_names(cycle), edges), "surface", to_string(kind), manifold);
}

std::vector<std::string> catalog_families() {
  return {"sphere", "sphere_bundle", "lens", "projective", "surface"};
}

}  // namespace gem
