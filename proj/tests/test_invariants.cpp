#include <doctest.h>

#include <random>

#include "gem/catalog.hpp"
#include "gem/invariants.hpp"

using namespace gem;

TEST_CASE("canonical cyclic permutations") {
  CHECK(all_cyclic_permutations(2).size() == 1);
  CHECK(all_cyclic_permutations(3).size() == 1);
  CHECK(all_cyclic_permutations(4).size() == 3);
  CHECK(all_cyclic_permutations(5).size() == 12);
  CHECK(all_cyclic_permutations(6).size() == 60);

  CHECK(CyclicPermutation::canonical({2, 4, 0, 1, 3}).order == std::vector<int>{0, 1, 3, 2, 4});
  // reversal lands in the same class
  CHECK(CyclicPermutation::canonical({3, 1, 0, 4, 2}).order == std::vector<int>{0, 1, 3, 2, 4});
  CHECK_THROWS_AS(CyclicPermutation::canonical({0, 1, 1}), Error);
  CHECK_THROWS_AS(CyclicPermutation::canonical({0, 1, 5}), Error);
}

TEST_CASE("two-vertex gems have genus zero") {
  for (int d = 1; d <= 6; ++d) {
    auto rep = min_regular_genus(sphere(d).graph);
    CHECK(rep.min_rho_doubled == 0);
    CHECK(rep.gem_complexity == 0);
    for (const auto& v : rep.values) CHECK(v.rho_doubled == 2 - v.chi);
  }
}

TEST_CASE("surface genus values") {
  CHECK(min_regular_genus(surface(SurfaceKind::RP2).graph).min_rho_doubled == 1);   // 1/2
  CHECK(min_regular_genus(surface(SurfaceKind::Klein).graph).min_rho_doubled == 2);  // 1
  CHECK(min_regular_genus(surface(SurfaceKind::Torus).graph).min_rho_doubled == 2);  // 1
  CHECK(min_regular_genus(surface(SurfaceKind::Genus2).graph).min_rho_doubled == 4);  // 2
}

TEST_CASE("lens spaces have Heegaard genus one") {
  for (int q = 2; q <= 5; ++q) CHECK(min_regular_genus(lens(q).graph).min_rho_doubled == 2);
}

TEST_CASE("genus is invariant under rotation and reversal of the arrangement") {
  auto g = lens(2).graph;
  int n = g.color_count();
  std::mt19937 rng(7);
  std::vector<int> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  for (int trial = 0; trial < 100; ++trial) {
    std::shuffle(arrangement.begin(), arrangement.end(), rng);
    auto eps = CyclicPermutation::canonical(arrangement);
    auto base_value = genus_for_permutation(g, eps);

    auto rotated = arrangement;
    std::rotate(rotated.begin(), rotated.begin() + (trial % n), rotated.end());
    auto reversed = arrangement;
    std::reverse(reversed.begin(), reversed.end());
    CHECK(CyclicPermutation::canonical(rotated) == eps);
    CHECK(CyclicPermutation::canonical(reversed) == eps);
    CHECK(genus_for_permutation(g, CyclicPermutation::canonical(rotated)).chi == base_value.chi);
    CHECK(genus_for_permutation(g, CyclicPermutation::canonical(reversed)).chi == base_value.chi);
  }
}

TEST_CASE("report sweep is exhaustive and consistent") {
  auto g = sphere_bundle(3, true).graph;
  auto rep = min_regular_genus(g);
  CHECK(rep.permutations.size() == all_cyclic_permutations(4).size());
  long long best = rep.values.front().rho_doubled;
  for (const auto& v : rep.values) best = std::min(best, v.rho_doubled);
  CHECK(best == rep.min_rho_doubled);
  CHECK(rep.min_rho_doubled == 2);  // handle genus 1
  CHECK(rep.orientable);
  CHECK(rep.gem_complexity == gem_complexity_bound(g));
  CHECK(gem_complexity_bound(g) == g.vertex_count() / 2 - 1);
}

TEST_CASE("four-manifold lower bounds") {
  // chi = 0, rank 1 (mapping tori of 3-manifolds with H1 rank 1)
  CHECK(lower_bounds_4manifold(0, 1) == std::pair<long long, long long>{4, 1});
  // chi = 0, rank 2
  CHECK(lower_bounds_4manifold(0, 2) == std::pair<long long, long long>{14, 6});
  // simply connected, chi = 2 (the 4-sphere)
  CHECK(lower_bounds_4manifold(2, 0) == std::pair<long long, long long>{0, 0});
}
