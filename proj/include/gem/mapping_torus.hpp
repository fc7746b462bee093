#ifndef GEM_MAPPING_TORUS_HPP
#define GEM_MAPPING_TORUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "gem/isomorphism.hpp"

namespace gem {

// Result of the mapping-torus construction: a crystallization on colors
// 0..d+1 with vertices "{k}:{j}" for copies 0 <= k <= d+1 of the base.
struct TorusBuild {
  ColoredGraph result;
  ColoredGraph base;
  ShiftIsomorphism iso;        // I, drives the copy gluings
  ShiftIsomorphism final_iso;  // I tilde, drives the closing color-d edges
  std::vector<ColoredGraph> intermediates;  // Gamma^{0,k} for k = 1..d+1 when requested
};

// Builds the (d+2)-colored crystallization of a mapping torus from a base
// d-dimensional crystallization and shift-1 isomorphisms I, I~.
//
// Copies 0..d+1 of the base keep colors 0..d-1 shifted by the copy index
// (mod d+2); gluing stage k in 1..d+1 adds edges {(k-1):I(j), k:j} of color
// k-2 (mod d+2); the closing stage adds edges {0:j, (d+1):I~(j)} of color d.
TorusBuild build_mapping_torus(const ColoredGraph& base, const ShiftIsomorphism& iso,
                               const ShiftIsomorphism& final_iso, bool emit_intermediates = false);

// The shift-1 isomorphism k:j -> (k+1):j of the result, valid when the build
// used I~ = I. Validated before returning.
ShiftIsomorphism induced_shift_isomorphism(const TorusBuild& build);

struct OrientabilityReport {
  bool orientable;  // ground truth: result bipartite
  bool base_bipartite;
  std::optional<bool> predicted_orientable;  // case analysis, bipartite bases only
  std::string detail;
};

OrientabilityReport classify_orientability(const TorusBuild& build);

}  // namespace gem

#endif
