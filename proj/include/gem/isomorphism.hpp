#ifndef GEM_ISOMORPHISM_HPP
#define GEM_ISOMORPHISM_HPP

#include <optional>
#include <vector>

#include "gem/colored_graph.hpp"

namespace gem {

// A vertex bijection paired with the color map i -> i+k (mod n).
struct ShiftIsomorphism {
  int shift = 0;
  std::vector<int> vertex_map;  // image index per vertex index

  friend bool operator==(const ShiftIsomorphism&, const ShiftIsomorphism&) = default;
};

// Edge-by-edge check: {u,v} c-colored iff {map(u),map(v)} is (c+k)-colored.
bool validate_shift_isomorphism(const ColoredGraph& g, const ShiftIsomorphism& iso);

// All vertex bijections compatible with the color map i -> i+k (mod n),
// found by rigidity propagation from each candidate image of vertex 0.
// Results are sorted by vertex_map (lexicographically least first).
std::vector<ShiftIsomorphism> find_shift_isomorphisms(const ColoredGraph& g, int shift);

struct ColorIsomorphism {
  std::vector<int> color_map;
  std::vector<int> vertex_map;
};

// Vertex bijection + color bijection carrying G onto H (identity color map
// when allow_color_permutation is off). Empty when none exists.
std::optional<ColorIsomorphism> is_isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                              bool allow_color_permutation);

// Component of g as a standalone graph; colors absent from the component are
// dropped and the used colors are relabeled order-preservingly to 0..k-1.
ColoredGraph extract_component(const ColoredGraph& g, const std::vector<int>& vertices);

}  // namespace gem

#endif
