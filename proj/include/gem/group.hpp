#ifndef GEM_GROUP_HPP
#define GEM_GROUP_HPP

#include <cstdint>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// Relator words are sequences of signed 1-based generator indices
// (+g for x_g, -g for x_g^{-1}).
struct GroupPresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;
  int color_i = 0, color_j = 0;
  int dropped_component = -1;  // index among the Delta \ {i,j} components
};

// Gagliardi presentation of pi_1 from a crystallization: generators are the
// components of the residue dropping colors {i,j} minus one, relators are
// read off the {i,j}-cycles.
GroupPresentation fundamental_group(const ColoredGraph& g, int i, int j);

struct AbelianInvariants {
  long long free_rank = 0;
  std::vector<long long> torsion;  // d_1 | d_2 | ..., each > 1
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Smith normal form D = U*A*V with unimodular U, V; diag is nonnegative with
// the divisibility chain d_1 | d_2 | ...
struct SmithResult {
  std::vector<std::vector<long long>> u, v;
  std::vector<long long> diag;  // min(rows, cols) entries
};

SmithResult smith_normal_form(std::vector<std::vector<long long>> a);

// Abelianization of a presentation: SNF of the relator exponent-sum matrix.
AbelianInvariants first_homology(const GroupPresentation& p);

}  // namespace gem

#endif
