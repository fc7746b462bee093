#include "gem/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace gem {

using nlohmann::json;

namespace {

std::string quote(const std::string& s) {
  return json(s).dump();  // JSON string escaping
}

}  // namespace

std::string encode(const ColoredGraph& g) {
  // Emitted by hand so the canonical byte layout round-trips exactly.
  std::ostringstream out;
  out << "{\"colors\": " << g.color_count() << ", \"vertices\": [";
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (v) out << ", ";
    out << quote(g.name(v));
  }
  out << "], \"edges\": [";
  auto es = g.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    if (i) out << ", ";
    out << "[" << es[i].u << ", " << es[i].v << ", " << es[i].color << "]";
  }
  out << "]}\n";
  return out.str();
}

ColoredGraph decode(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("colors") || !doc.contains("vertices") ||
      !doc.contains("edges"))
    throw Error(Errc::ParseError, "expected keys colors, vertices, edges");
  if (!doc["colors"].is_number_integer() || !doc["vertices"].is_array() || !doc["edges"].is_array())
    throw Error(Errc::ParseError, "bad field types");
  int colors = doc["colors"].get<int>();
  std::vector<std::string> names;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw Error(Errc::ParseError, "vertex names must be strings");
    names.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<int, int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 3) throw Error(Errc::ParseError, "edge must be [u, v, c]");
    int u = e[0].get<int>(), v = e[1].get<int>(), c = e[2].get<int>();
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v, c);
  }
  try {
    return ColoredGraph(colors, names, edges);
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError) throw;
    throw Error(Errc::ValidationError, e.what());
  }
}

std::string encode_isomorphism(const ColoredGraph& g, const ShiftIsomorphism& iso) {
  std::ostringstream out;
  out << "{\"shift\": " << iso.shift << ", \"vertex_map\": [";
  for (size_t v = 0; v < iso.vertex_map.size(); ++v) {
    if (v) out << ", ";
    out << "[" << quote(g.name(static_cast<int>(v))) << ", " << quote(g.name(iso.vertex_map[v]))
        << "]";
  }
  out << "]}\n";
  return out.str();
}

ShiftIsomorphism decode_isomorphism(const ColoredGraph& g, const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("shift") || !doc.contains("vertex_map"))
    throw Error(Errc::ParseError, "expected keys shift, vertex_map");
  ShiftIsomorphism iso;
  iso.shift = doc["shift"].get<int>();
  iso.vertex_map.assign(g.vertex_count(), -1);
  for (const auto& pair : doc["vertex_map"]) {
    if (!pair.is_array() || pair.size() != 2) throw Error(Errc::ParseError, "vertex_map entries are pairs");
    int u = g.index_of(pair[0].get<std::string>());
    int v = g.index_of(pair[1].get<std::string>());
    if (u == -1 || v == -1) throw Error(Errc::ValidationError, "unknown vertex in vertex_map");
    iso.vertex_map[u] = v;
  }
  for (int v : iso.vertex_map)
    if (v == -1) throw Error(Errc::ValidationError, "vertex_map is not total");
  if (!validate_shift_isomorphism(g, iso))
    throw Error(Errc::IsomorphismMismatch, "vertex_map is not a shift isomorphism of the graph");
  return iso;
}

std::string export_dot(const ColoredGraph& g, const std::optional<CyclicPermutation>& eps) {
  // Fixed palette + dash patterns, cycling after 8 colors.
  static const char* palettes[] = {"black",  "red",    "blue",   "forestgreen",
                                   "orange", "purple", "brown",  "deeppink"};
  static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
  std::ostringstream out;
  out << "graph gem {\n";
  out << "  node [shape=circle];\n";

  std::vector<int> order(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
  if (eps && eps->order.size() >= 2) {
    // Walk the bicolored cycles of the first consecutive pair to hint the
    // regular-embedding layout.
    int ci = eps->order[0], cj = eps->order[1];
    std::vector<char> seen(g.vertex_count(), 0);
    order.clear();
    for (int s = 0; s < g.vertex_count(); ++s) {
      int cur = s, color = ci;
      while (cur != -1 && !seen[cur]) {
        seen[cur] = 1;
        order.push_back(cur);
        cur = g.neighbor(cur, color);
        color = (color == ci) ? cj : ci;
      }
    }
  }
  for (int v : order) out << "  " << quote(g.name(v)) << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << quote(g.name(e.u)) << " -- " << quote(g.name(e.v)) << " [color="
        << palettes[e.color % 8] << ", style=" << styles[e.color % 4] << ", label=\"" << e.color
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gem
