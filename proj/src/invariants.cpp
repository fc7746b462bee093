#include "gem/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace gem {

CyclicPermutation CyclicPermutation::canonical(std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  {
    std::vector<int> sorted = a;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
      if (sorted[i] != i) throw Error(Errc::BadColors, "not a permutation of the color set");
  }
  // Rotate 0 to the front, then pick the reflection with the smaller second entry.
  auto it = std::find(a.begin(), a.end(), 0);
  std::rotate(a.begin(), it, a.end());
  if (n >= 3 && a[1] > a[n - 1]) std::reverse(a.begin() + 1, a.end());
  return CyclicPermutation{std::move(a)};
}

std::vector<CyclicPermutation> all_cyclic_permutations(int n) {
  std::vector<CyclicPermutation> out;
  if (n == 2) {
    out.push_back(CyclicPermutation{{0, 1}});
    return out;
  }
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;  // one representative per reflection
    std::vector<int> a;
    a.reserve(n);
    a.push_back(0);
    a.insert(a.end(), rest.begin(), rest.end());
    out.push_back(CyclicPermutation{std::move(a)});
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

namespace {

std::vector<std::vector<int>> pair_table(const ColoredGraph& g) {
  const int n = g.color_count();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t[i][j] = t[j][i] = pair_residue_count(g, i, j);
  return t;
}

GenusValue genus_from_table(const std::vector<std::vector<int>>& t, int vertex_count,
                            const CyclicPermutation& eps) {
  const int n = static_cast<int>(eps.order.size());
  long long sum = 0;
  for (int i = 0; i < n; ++i) sum += t[eps.order[i]][eps.order[(i + 1) % n]];
  const int d = n - 1;
  long long chi = sum + static_cast<long long>(1 - d) * vertex_count / 2;
  return GenusValue{chi, 2 - chi};
}

void check_regular_connected(const ColoredGraph& g) {
  if (!g.is_regular()) throw Error(Errc::NotRegular, "genus needs a regular graph");
  if (!g.is_connected()) throw Error(Errc::Disconnected, "genus needs a connected graph");
}

}  // namespace

GenusValue genus_for_permutation(const ColoredGraph& g, const CyclicPermutation& eps) {
  check_regular_connected(g);
  if (static_cast<int>(eps.order.size()) != g.color_count())
    throw Error(Errc::BadColors, "permutation does not cover the color set");
  return genus_from_table(pair_table(g), g.vertex_count(), eps);
}

GenusReport min_regular_genus(const ColoredGraph& g) {
  check_regular_connected(g);
  auto table = pair_table(g);
  GenusReport rep;
  rep.permutations = all_cyclic_permutations(g.color_count());
  rep.values.reserve(rep.permutations.size());
  bool first = true;
  for (const auto& eps : rep.permutations) {
    auto v = genus_from_table(table, g.vertex_count(), eps);
    if (first || v.rho_doubled < rep.min_rho_doubled) {
      rep.min_rho_doubled = v.rho_doubled;
      rep.minimizing = eps;
      first = false;
    }
    rep.values.push_back(v);
  }
  rep.gem_complexity = g.vertex_count() / 2 - 1;
  rep.orientable = is_bipartite(g).bipartite;
  return rep;
}

long long gem_complexity_bound(const ColoredGraph& g) {
  if (!g.is_regular()) throw Error(Errc::NotRegular, "gem-complexity needs a regular graph");
  return g.vertex_count() / 2 - 1;
}

std::pair<long long, long long> lower_bounds_4manifold(long long euler_char, long long rank_pi1) {
  return {3 * euler_char + 10 * rank_pi1 - 6, 2 * euler_char + 5 * rank_pi1 - 4};
}

}  // namespace gem
