// Acceptance gate: eight independent checks, one line of output each.
// Exits nonzero when any check fails.

#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gem/catalog.hpp"
#include "gem/group.hpp"
#include "gem/invariants.hpp"
#include "gem/mapping_torus.hpp"

using namespace gem;

namespace {

int failures = 0;
std::ostringstream detail;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    detail << "    failed: " << what << "\n";
  }
}

void criterion(int number, const std::string& title, const std::function<void()>& body) {
  int before = failures;
  std::string error;
  try {
    body();
  } catch (const std::exception& e) {
    ++failures;
    error = e.what();
  }
  bool pass = failures == before;
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", number, title.c_str());
  if (!error.empty()) std::printf("    threw: %s\n", error.c_str());
  if (!pass && detail.tellp() > 0) std::fputs(detail.str().c_str(), stdout);
  detail.str("");
}

TorusBuild build_first(const CatalogEntry& e, bool intermediates = false) {
  const auto& iso = e.shift_isomorphisms.front();
  return build_mapping_torus(e.graph, iso, iso, intermediates);
}

bool attains(const ColoredGraph& g, long long rho_doubled) {
  auto rep = min_regular_genus(g);
  for (const auto& v : rep.values)
    if (v.rho_doubled == rho_doubled) return true;
  return false;
}

AbelianInvariants h1(const ColoredGraph& g, int i = 0, int j = 1) {
  return first_homology(fundamental_group(g, i, j));
}

std::vector<CatalogEntry> all_bases() {
  std::vector<CatalogEntry> all;
  for (int d = 1; d <= 6; ++d) all.push_back(sphere(d));
  for (int d = 3; d <= 6; ++d) {
    all.push_back(sphere_bundle(d, true));
    all.push_back(sphere_bundle(d, false));
  }
  for (int q = 2; q <= 5; ++q) all.push_back(lens(q));
  for (int d = 2; d <= 7; ++d) all.push_back(projective(d));
  for (auto k : {SurfaceKind::RP2, SurfaceKind::Klein, SurfaceKind::Torus, SurfaceKind::Genus2})
    all.push_back(surface(k));
  return all;
}

}  // namespace

int main() {
  criterion(1, "two-vertex gems: genus zero, gem-complexity zero (d = 1..6)", [] {
    for (int d = 1; d <= 6; ++d) {
      auto rep = min_regular_genus(sphere(d).graph);
      expect(rep.min_rho_doubled == 0, "sphere(" + std::to_string(d) + ") genus");
      expect(rep.gem_complexity == 0, "sphere(" + std::to_string(d) + ") complexity");
    }
  });

  criterion(2, "sphere-bundle family shape and genus one (d = 3..6)", [] {
    for (int d = 3; d <= 6; ++d)
      for (bool orientable : {true, false}) {
        auto e = sphere_bundle(d, orientable);
        std::string tag = "sphere_bundle(" + std::to_string(d) + "," + (orientable ? "o" : "n") + ")";
        expect(e.graph.vertex_count() == 2 * (d + 1), tag + " vertices");
        for (int i = 0; i < d + 1; ++i)
          for (int j = i + 1; j < d + 1; ++j)
            expect(pair_residue_count(e.graph, i, j) == d - 1, tag + " pair residues");
        expect(min_regular_genus(e.graph).min_rho_doubled == 2, tag + " genus");
        expect(is_bipartite(e.graph).bipartite == orientable, tag + " bipartite flag");
      }
  });

  criterion(3, "sphere-bundle mapping tori: counts, rho = d^2-3, d=3 minimum 6 and H1 = Z^2", [] {
    for (int d = 3; d <= 6; ++d)
      for (bool orientable : {true, false}) {
        auto base = sphere_bundle(d, orientable);
        const auto* iso = orientable && base.swapping() ? base.swapping()
                                                        : &base.shift_isomorphisms.front();
        auto build = build_mapping_torus(base.graph, *iso, *iso);
        std::string tag = "torus over sphere_bundle(" + std::to_string(d) + ")";
        expect(build.result.vertex_count() == (d + 2) * 2 * (d + 1), tag + " vertices");

        long long expected_g = 2 * (d + 1) + (d - 2) * (d - 1);
        for (int i = 0; i < d + 2; ++i)
          for (int j = i + 2; j < d + 2; ++j) {
            if (i == 0 && j == d + 1) continue;  // consecutive mod d+2
            expect(pair_residue_count(build.result, i, j) == expected_g,
                   tag + " non-consecutive pair residues");
          }
        expect(attains(build.result, 2LL * (d * d - 3)), tag + " rho attained");
        expect(gem_complexity_bound(build.result) == (long long)d * d + 3 * d + 1, tag + " complexity");
        if (d == 3) {
          expect(min_regular_genus(build.result).min_rho_doubled == 12, tag + " minimum genus 6");
          expect(h1(build.result) == AbelianInvariants{2, {}}, tag + " H1 = Z^2");
        }
      }
  });

  criterion(4, "lens mapping tori: 20q vertices, rho = 5q-4; q=2 minimum 6, H1, class-preserving case", [] {
    auto eps = CyclicPermutation::canonical({0, 2, 4, 1, 3});
    for (int q = 2; q <= 5; ++q) {
      auto base = lens(q);
      const auto* iso = base.swapping();
      expect(iso != nullptr, "lens swapping isomorphism");
      auto build = build_mapping_torus(base.graph, *iso, *iso);
      std::string tag = "torus over lens(" + std::to_string(q) + ")";
      expect(build.result.vertex_count() == 20 * q, tag + " vertices");
      expect(genus_for_permutation(build.result, eps).rho_doubled == 2 * (5 * q - 4),
             tag + " rho at (0,2,4,1,3)");
      if (q == 2) {
        expect(min_regular_genus(build.result).min_rho_doubled == 12, tag + " minimum genus 6");
        expect(h1(build.result) == AbelianInvariants{1, {2}}, tag + " H1 = Z + Z/2");
        const auto* pres = base.preserving();
        expect(pres != nullptr, "lens(2) class-preserving isomorphism");
        auto nb = build_mapping_torus(base.graph, *pres, *pres);
        expect(!is_bipartite(nb.result).bipartite, tag + " class-preserving build non-bipartite");
        expect(genus_for_permutation(nb.result, eps).rho_doubled == 12,
               tag + " class-preserving rho 6");
      }
    }
  });

  criterion(5, "three-torus and odd projective-space mapping tori", [] {
    auto base = surface(SurfaceKind::Torus);
    const auto* iso = base.swapping() ? base.swapping() : &base.shift_isomorphisms.front();
    auto t3 = build_mapping_torus(base.graph, *iso, *iso);
    expect(t3.result.vertex_count() == 24, "T^3 vertices");
    expect(h1(t3.result) == AbelianInvariants{3, {}}, "T^3 H1 = Z^3");
    expect(gem_complexity_bound(t3.result) == 11, "T^3 complexity");

    auto induced = induced_shift_isomorphism(t3);
    auto iter = build_mapping_torus(t3.result, induced, induced);
    expect(iter.result.vertex_count() == 120, "T^3 torus vertices");
    auto eps = CyclicPermutation::canonical({0, 2, 4, 1, 3});
    long long rho2 = genus_for_permutation(iter.result, eps).rho_doubled;
    expect(rho2 <= 32, "T^3 torus rho at (0,2,4,1,3) <= 16");
    long long p = t3.result.vertex_count() / 2;
    long long g02 = pair_residue_count(t3.result, 0, 2);
    expect(2 * (1 + 5 * (p - g02) / 2) == 32, "surviving-squares formula gives 16");
    expect(rho2 == 32, "T^3 torus attains 16");

    for (int d : {3, 5}) {
      auto pr = build_first(projective(d));
      std::string tag = "projective(" + std::to_string(d) + ") torus";
      expect(pr.result.vertex_count() == (d + 2) * (1 << d), tag + " vertices");
      expect(attains(pr.result, 2 * (1 + (1LL << (d - 3)) * (d * d - 4))), tag + " rho attained");
    }
  });

  criterion(6, "non-orientable surface bundles over the circle", [] {
    auto eps = CyclicPermutation::canonical({0, 2, 4, 1, 3});
    for (int h = 1; h <= 2; ++h) {
      auto base = surface(h == 1 ? SurfaceKind::RP2 : SurfaceKind::Klein);
      auto prod = build_first(base);
      std::string tag = "U_" + std::to_string(h) + " x S^1";
      expect(prod.result.vertex_count() == 8 * (h + 1), tag + " vertices");
      expect(h1(prod.result) == (h == 1 ? AbelianInvariants{1, {2}} : AbelianInvariants{2, {2}}),
             tag + " H1");

      auto induced = induced_shift_isomorphism(prod);
      auto iter = build_mapping_torus(prod.result, induced, induced);
      expect(iter.result.vertex_count() == 40 * (h + 1), tag + " torus vertices");
      expect(genus_for_permutation(iter.result, eps).rho_doubled == 2 * (5 * h + 6),
             tag + " torus rho 5h+6");
    }
    auto pr = build_first(projective(4));
    expect(pr.result.vertex_count() == 96, "projective(4) torus vertices");
    expect(attains(pr.result, 50), "projective(4) torus rho 25 attained");
  });

  criterion(7, "surface products attain minimum genus p", [] {
    for (auto kind : {SurfaceKind::RP2, SurfaceKind::Klein, SurfaceKind::Torus}) {
      auto e = surface(kind);
      auto build = build_first(e);
      long long p = e.graph.vertex_count() / 2;
      expect(min_regular_genus(build.result).min_rho_doubled == 2 * p,
             to_string(kind) + " product genus");
    }
  });

  criterion(8, "property suites: boundaries, H1 pair-independence, genus symmetry, SNF, complements", [] {
    // every intermediate stage of every catalog build has boundary
    // components isomorphic to the base
    for (const auto& e : all_bases()) {
      auto build = build_first(e, true);
      for (const auto& stage : build.intermediates) {
        auto bd = boundary_graph(stage);
        expect(bd.components.size() == 2, e.family + "(" + e.params + ") boundary count");
        for (const auto& comp : bd.components) {
          auto piece = extract_component(bd.graph, comp);
          expect(is_isomorphic(piece, e.graph, true).has_value(),
                 e.family + "(" + e.params + ") boundary isomorphism");
        }
      }
    }

    // H1 does not depend on the color pair
    for (const CatalogEntry& e : {lens(2), lens(5), sphere_bundle(4, false), projective(3)}) {
      auto reference = h1(e.graph);
      for (int i = 0; i < e.graph.color_count(); ++i)
        for (int j = i + 1; j < e.graph.color_count(); ++j)
          expect(h1(e.graph, i, j) == reference, e.family + " H1 pair independence");
    }

    // genus is a class function of the cyclic arrangement
    {
      auto g = build_first(lens(2)).result;
      int n = g.color_count();
      std::mt19937 rng(5);
      std::vector<int> arr(n);
      std::iota(arr.begin(), arr.end(), 0);
      for (int t = 0; t < 100; ++t) {
        std::shuffle(arr.begin(), arr.end(), rng);
        auto eps = CyclicPermutation::canonical(arr);
        auto rotated = arr;
        std::rotate(rotated.begin(), rotated.begin() + 1 + t % (n - 1), rotated.end());
        auto reversed = arr;
        std::reverse(reversed.begin(), reversed.end());
        long long chi = genus_for_permutation(g, eps).chi;
        expect(genus_for_permutation(g, CyclicPermutation::canonical(rotated)).chi == chi,
               "rotation invariance");
        expect(genus_for_permutation(g, CyclicPermutation::canonical(reversed)).chi == chi,
               "reversal invariance");
      }
    }

    // Smith normal form recomposes through its own elementary operations
    {
      std::mt19937 rng(17);
      std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
      for (int t = 0; t < 200; ++t) {
        size_t rows = dim(rng), cols = dim(rng);
        std::vector<std::vector<long long>> a(rows, std::vector<long long>(cols));
        for (auto& row : a)
          for (auto& x : row) x = entry(rng);
        auto r = smith_normal_form(a);
        // recomposition: U*A*V equals the diagonal
        for (size_t i = 0; i < rows; ++i)
          for (size_t j = 0; j < cols; ++j) {
            __int128 sum = 0;  // transform entries can exceed 2^32; keep the products exact
            for (size_t s = 0; s < rows; ++s)
              for (size_t s2 = 0; s2 < cols; ++s2)
                sum += (__int128)r.u[i][s] * a[s][s2] * r.v[s2][j];
            expect(sum == (i == j && i < r.diag.size() ? r.diag[i] : 0), "SNF recomposition");
          }
        for (size_t i = 0; i + 1 < r.diag.size(); ++i)
          expect(r.diag[i + 1] == 0 || (r.diag[i] != 0 && r.diag[i + 1] % r.diag[i] == 0) ||
                     (r.diag[i] == 0 && r.diag[i + 1] == 0),
                 "SNF divisibility chain");
      }
    }

    // complementary color pairs have equal residue counts on 3-manifold gems
    std::vector<CatalogEntry> threes;
    for (int q = 2; q <= 5; ++q) threes.push_back(lens(q));
    threes.push_back(sphere_bundle(3, true));
    threes.push_back(sphere_bundle(3, false));
    threes.push_back(sphere(3));
    threes.push_back(projective(3));
    for (const auto& e : threes) {
      const int pairs[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
      for (const auto& p : pairs)
        expect(pair_residue_count(e.graph, p[0], p[1]) == pair_residue_count(e.graph, p[2], p[3]),
               e.family + "(" + e.params + ") complementary pairs");
    }
  });

  return failures == 0 ? 0 : 1;
}
