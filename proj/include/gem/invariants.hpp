#ifndef GEM_INVARIANTS_HPP
#define GEM_INVARIANTS_HPP

#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// An arrangement of the full color set, canonicalized with eps[0] = 0 and
// eps[1] < eps[n-1] (one representative per rotation/reflection class).
struct CyclicPermutation {
  std::vector<int> order;

  static CyclicPermutation canonical(std::vector<int> arrangement);
  friend bool operator==(const CyclicPermutation&, const CyclicPermutation&) = default;
};

// All canonical cyclic permutations of 0..n-1: (n-1)!/2 of them for n >= 3.
std::vector<CyclicPermutation> all_cyclic_permutations(int n);

// Euler characteristic chi_eps and the doubled regular genus 2*rho_eps of a
// regular embedding. rho_eps = 1 - chi_eps/2 is an exact half-integer.
struct GenusValue {
  long long chi;
  long long rho_doubled;  // 2*rho, always an integer
};

GenusValue genus_for_permutation(const ColoredGraph& g, const CyclicPermutation& eps);

struct GenusReport {
  std::vector<CyclicPermutation> permutations;
  std::vector<GenusValue> values;        // parallel to permutations
  CyclicPermutation minimizing;          // lexicographically least attaining the min
  long long min_rho_doubled = 0;
  long long gem_complexity = 0;          // |V|/2 - 1
  bool orientable = false;
};

// Full sweep over all canonical cyclic permutations; pair counts g_{i,j} are
// computed once and each permutation is a table lookup sum.
GenusReport min_regular_genus(const ColoredGraph& g);

// |V|/2 - 1, an upper bound for the gem-complexity of the underlying manifold.
long long gem_complexity_bound(const ColoredGraph& g);

// Prop-style lower bounds for a PL 4-manifold with Euler characteristic chi
// and fundamental-group rank m: k >= 3 chi + 10 m - 6, genus >= 2 chi + 5 m - 4.
std::pair<long long, long long> lower_bounds_4manifold(long long euler_char, long long rank_pi1);

}  // namespace gem

#endif
