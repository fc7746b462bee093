#include "gem/mapping_torus.hpp"

#include <tuple>

namespace gem {

namespace {

void check_inputs(const ColoredGraph& base, const ShiftIsomorphism& iso,
                  const ShiftIsomorphism& final_iso) {
  if (!base.is_regular() || !base.is_connected())
    throw Error(Errc::IsomorphismMismatch, "base must be a regular connected colored graph");
  if (!is_contracted(base))
    throw Error(Errc::NotContracted, "base must be contracted");
  if (iso.shift != 1 || !validate_shift_isomorphism(base, iso))
    throw Error(Errc::IsomorphismMismatch, "I is not a shift-1 isomorphism of the base");
  if (final_iso.shift != 1 || !validate_shift_isomorphism(base, final_iso))
    throw Error(Errc::IsomorphismMismatch, "I~ is not a shift-1 isomorphism of the base");
}

}  // namespace

TorusBuild build_mapping_torus(const ColoredGraph& base, const ShiftIsomorphism& iso,
                               const ShiftIsomorphism& final_iso, bool emit_intermediates) {
  check_inputs(base, iso, final_iso);
  const int d = base.color_count() - 1;
  const int nc = d + 2;  // copies and result colors
  const int nv = base.vertex_count();

  auto vert = [&](int k, int j) { return k * nv + j; };
  std::vector<std::string> names(nc * nv);
  for (int k = 0; k < nc; ++k)
    for (int j = 0; j < nv; ++j) names[vert(k, j)] = std::to_string(k) + ":" + base.name(j);

  auto base_edges = base.edges();
  std::vector<std::tuple<int, int, int>> edges;
  // (i) copies: colors 0..d-1 of the base, shifted by the copy index mod d+2.
  for (int k = 0; k < nc; ++k)
    for (const Edge& e : base_edges)
      if (e.color <= d - 1) edges.emplace_back(vert(k, e.u), vert(k, e.v), (e.color + k) % nc);
  // (ii),(iv),(v) gluing stages: {(k-1):I(j), k:j} of color k-2 mod d+2.
  for (int k = 1; k <= d + 1; ++k)
    for (int j = 0; j < nv; ++j)
      edges.emplace_back(vert(k - 1, iso.vertex_map[j]), vert(k, j), ((k - 2) % nc + nc) % nc);

  std::vector<ColoredGraph> intermediates;
  if (emit_intermediates) {
    for (int kmax = 1; kmax <= d + 1; ++kmax) {
      std::vector<std::tuple<int, int, int>> sub;
      for (const auto& [u, v, c] : edges)
        if (u < (kmax + 1) * nv && v < (kmax + 1) * nv) sub.emplace_back(u, v, c);
      intermediates.emplace_back(
          nc, std::vector<std::string>(names.begin(), names.begin() + (kmax + 1) * nv), sub);
    }
  }

  // Final gluing: {0:j, (d+1):I~(j)} of color d.
  for (int j = 0; j < nv; ++j)
    edges.emplace_back(vert(0, j), vert(d + 1, final_iso.vertex_map[j]), d);

  ColoredGraph result(nc, names, edges);
  if (!result.is_regular() || !result.is_connected() || !is_contracted(result))
    throw Error(Errc::NotContracted, "mapping torus result failed validation");
  return TorusBuild{std::move(result), base, iso, final_iso, std::move(intermediates)};
}

ShiftIsomorphism induced_shift_isomorphism(const TorusBuild& build) {
  const int nc = build.base.color_count() + 1;
  const int nv = build.base.vertex_count();
  ShiftIsomorphism out;
  out.shift = 1;
  out.vertex_map.resize(nc * nv);
  for (int k = 0; k < nc; ++k)
    for (int j = 0; j < nv; ++j) out.vertex_map[k * nv + j] = ((k + 1) % nc) * nv + j;
  if (!validate_shift_isomorphism(build.result, out))
    throw Error(Errc::PreconditionViolated,
                "induced map k:j -> (k+1):j is not an isomorphism (build used I~ != I?)");
  return out;
}

OrientabilityReport classify_orientability(const TorusBuild& build) {
  OrientabilityReport rep;
  auto bip = is_bipartite(build.result);
  rep.orientable = bip.bipartite;
  auto base_bip = is_bipartite(build.base);
  rep.base_bipartite = base_bip.bipartite;
  if (!rep.base_bipartite) {
    rep.detail = "base non-bipartite, mapping torus non-orientable";
    return rep;
  }
  auto swaps = [&](const ShiftIsomorphism& iso) {
    return base_bip.vertex_class[iso.vertex_map[0]] != base_bip.vertex_class[0];
  };
  const bool i_swaps = swaps(build.iso);
  const bool f_swaps = swaps(build.final_iso);
  const int d = build.base.color_count() - 1;
  // Parity case analysis: class-swapping gluings keep copy offsets constant,
  // class-preserving ones alternate them; the closing edges then force the
  // bipartiteness outcome below.
  bool predicted = (i_swaps && f_swaps) || (!i_swaps && !f_swaps && d % 2 == 0) ||
                   (!i_swaps && f_swaps && d % 2 == 1);
  rep.predicted_orientable = predicted;
  rep.detail = std::string("I ") + (i_swaps ? "class-swapping" : "class-preserving") + ", I~ " +
               (f_swaps ? "class-swapping" : "class-preserving") + ", d=" + std::to_string(d);
  return rep;
}

}  // namespace gem
