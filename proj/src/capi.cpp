#include "gemc.h"

#include <json.hpp>

#include <cstring>
#include <string>

#include "gem/catalog.hpp"
#include "gem/group.hpp"
#include "gem/invariants.hpp"
#include "gem/mapping_torus.hpp"
#include "gem/reproduce.hpp"
#include "gem/serialize.hpp"

using nlohmann::json;

struct gemc_graph {
  gem::ColoredGraph g;
};

namespace {

thread_local std::string g_last_error;

gemc_status status_for(gem::Errc code) {
  switch (code) {
    case gem::Errc::ParseError:
    case gem::Errc::BadParameter:
    case gem::Errc::BadColors:
    case gem::Errc::UnsupportedParams:
      return GEMC_ERR_BAD_INPUT;
    case gem::Errc::IsomorphismMismatch:
    case gem::Errc::PreconditionViolated:
      return GEMC_ERR_MISMATCH;
    default:
      return GEMC_ERR_VALIDATION;
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
gemc_status guard(Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const gem::Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GEMC_ERR_BAD_INPUT;
  }
}

json iso_to_json(const gem::ColoredGraph& g, const gem::ShiftIsomorphism& iso) {
  json pairs = json::array();
  for (size_t v = 0; v < iso.vertex_map.size(); ++v)
    pairs.push_back({g.name(static_cast<int>(v)), g.name(iso.vertex_map[v])});
  return {{"shift", iso.shift}, {"vertex_map", pairs}};
}

}  // namespace

extern "C" {

const char* gemc_last_error(void) { return g_last_error.c_str(); }

void gemc_graph_free(gemc_graph* g) { delete g; }
void gemc_string_free(char* s) { delete[] s; }

gemc_status gemc_catalog_list(char** out_json) {
  return guard([&] {
    json arr = json::array();
    arr.push_back({{"family", "sphere"}, {"params", "--d N (N >= 1)"}, {"manifold", "S^d"}});
    arr.push_back({{"family", "sphere_bundle"},
                   {"params", "--d N (N >= 3), --orientable / --twisted"},
                   {"manifold", "S^{d-1} x S^1 or twisted bundle"}});
    arr.push_back({{"family", "lens"}, {"params", "--q N (N >= 2)"}, {"manifold", "L(q,1)"}});
    arr.push_back({{"family", "projective"}, {"params", "--d N (N >= 2)"}, {"manifold", "RP^d"}});
    arr.push_back({{"family", "surface"},
                   {"params", "--kind rp2|klein|torus|genus2"},
                   {"manifold", "surface"}});
    *out_json = dup_string(arr.dump(2) + "\n");
    return GEMC_OK;
  });
}

gemc_status gemc_catalog_emit(const char* family, const char* params_json, gemc_graph** out) {
  return guard([&] {
    json params = params_json && *params_json ? json::parse(params_json) : json::object();
    std::string fam = family ? family : "";
    gem::CatalogEntry entry = [&] {
      if (fam == "sphere") return gem::sphere(params.value("d", -1));
      if (fam == "sphere_bundle")
        return gem::sphere_bundle(params.value("d", -1), params.value("orientable", true));
      if (fam == "lens") return gem::lens(params.value("q", -1));
      if (fam == "projective") return gem::projective(params.value("d", -1));
      if (fam == "surface")
        return gem::surface(gem::surface_kind_from_string(params.value("kind", "")));
      throw gem::Error(gem::Errc::BadParameter, "unknown family " + fam);
    }();
    *out = new gemc_graph{std::move(entry.graph)};
    return GEMC_OK;
  });
}

gemc_status gemc_graph_decode(const char* text, gemc_graph** out) {
  return guard([&] {
    *out = new gemc_graph{gem::decode(text ? text : "")};
    return GEMC_OK;
  });
}

gemc_status gemc_graph_encode(const gemc_graph* g, char** out_text) {
  return guard([&] {
    *out_text = dup_string(gem::encode(g->g));
    return GEMC_OK;
  });
}

gemc_status gemc_graph_dot(const gemc_graph* g, const char* eps_json, char** out_text) {
  return guard([&] {
    std::optional<gem::CyclicPermutation> eps;
    if (eps_json && *eps_json)
      eps = gem::CyclicPermutation::canonical(json::parse(eps_json).get<std::vector<int>>());
    *out_text = dup_string(gem::export_dot(g->g, eps));
    return GEMC_OK;
  });
}

gemc_status gemc_graph_analyze(const gemc_graph* handle, const char* options_json,
                               char** out_json) {
  return guard([&] {
    const gem::ColoredGraph& g = handle->g;
    json options = options_json && *options_json ? json::parse(options_json) : json::object();
    json out;
    out["colors"] = g.color_count();
    out["vertices"] = g.vertex_count();
    out["regular"] = g.is_regular();
    out["connected"] = g.is_connected();
    if (g.is_regular()) {
      out["contracted"] = gem::is_contracted(g);
      out["gem_complexity"] = gem::gem_complexity_bound(g);
    }
    if (options.value("orientable", false) || options.value("genus", false)) {
      auto bip = gem::is_bipartite(g);
      out["bipartite"] = bip.bipartite;
      out["orientable"] = bip.bipartite;
    }
    if (options.value("genus", false)) {
      auto rep = gem::min_regular_genus(g);
      json sweep = json::array();
      for (size_t i = 0; i < rep.permutations.size(); ++i)
        sweep.push_back({{"eps", rep.permutations[i].order},
                         {"chi", rep.values[i].chi},
                         {"rho_doubled", rep.values[i].rho_doubled}});
      out["genus"] = {{"sweep", sweep},
                      {"min_rho_doubled", rep.min_rho_doubled},
                      {"minimizing_eps", rep.minimizing.order}};
    }
    if (options.contains("h1")) {
      auto pair = options["h1"].get<std::vector<int>>();
      if (pair.size() != 2) throw gem::Error(gem::Errc::BadColors, "h1 expects two colors");
      auto pres = gem::fundamental_group(g, pair[0], pair[1]);
      auto inv = gem::first_homology(pres);
      json relators = json::array();
      for (const auto& w : pres.relators) relators.push_back(w);
      out["pi1_presentation"] = {{"generators", pres.generator_count}, {"relators", relators}};
      out["h1"] = {{"free_rank", inv.free_rank}, {"torsion", inv.torsion}};
    }
    *out_json = dup_string(out.dump(2) + "\n");
    return GEMC_OK;
  });
}

gemc_status gemc_shift_isomorphisms(const gemc_graph* g, int shift, char** out_json) {
  return guard([&] {
    json arr = json::array();
    for (const auto& iso : gem::find_shift_isomorphisms(g->g, shift))
      arr.push_back(iso_to_json(g->g, iso));
    *out_json = dup_string(arr.dump(2) + "\n");
    return GEMC_OK;
  });
}

gemc_status gemc_torus_build(const gemc_graph* base, const char* iso_json,
                             const char* final_iso_json, gemc_graph** out,
                             char** out_intermediates_json) {
  return guard([&] {
    gem::ShiftIsomorphism iso;
    if (iso_json && *iso_json) {
      iso = gem::decode_isomorphism(base->g, iso_json);
    } else {
      auto found = gem::find_shift_isomorphisms(base->g, 1);
      if (found.empty())
        throw gem::Error(gem::Errc::IsomorphismMismatch, "base has no shift-1 isomorphism");
      iso = found.front();
    }
    gem::ShiftIsomorphism final_iso = iso;
    if (final_iso_json && *final_iso_json)
      final_iso = gem::decode_isomorphism(base->g, final_iso_json);
    auto build = gem::build_mapping_torus(base->g, iso, final_iso,
                                          out_intermediates_json != nullptr);
    if (out_intermediates_json) {
      json arr = json::array();
      for (const auto& g : build.intermediates) arr.push_back(json::parse(gem::encode(g)));
      *out_intermediates_json = dup_string(arr.dump(2) + "\n");
    }
    *out = new gemc_graph{std::move(build.result)};
    return GEMC_OK;
  });
}

gemc_status gemc_reproduce(const char* theorem, const char* params_json, char** out_json) {
  return guard([&] {
    json params = params_json && *params_json ? json::parse(params_json) : json::object();
    std::optional<int> d, q, h;
    if (params.contains("d")) d = params["d"].get<int>();
    if (params.contains("q")) q = params["q"].get<int>();
    if (params.contains("h")) h = params["h"].get<int>();
    auto rows = gem::reproduce(theorem ? theorem : "", d, q, h);
    *out_json = dup_string(gem::format_rows_json(rows));
    bool all_pass = true;
    for (const auto& r : rows) all_pass = all_pass && r.pass;
    return all_pass ? GEMC_OK : GEMC_ERR_MISMATCH;
  });
}

}  // extern "C"
