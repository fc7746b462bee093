#include "gem/colored_graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace gem {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::ColorClash: return "ColorClash";
    case Errc::ColorOutOfRange: return "ColorOutOfRange";
    case Errc::NotRegular: return "NotRegular";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotContracted: return "NotContracted";
    case Errc::NotBoundaryRegular: return "NotBoundaryRegular";
    case Errc::AmbiguousMissingColor: return "AmbiguousMissingColor";
    case Errc::IsomorphismMismatch: return "IsomorphismMismatch";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ConstructionInvalid: return "ConstructionInvalid";
    case Errc::BadParameter: return "BadParameter";
    case Errc::BadColors: return "BadColors";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::UnsupportedParams: return "UnsupportedParams";
  }
  return "Error";
}

ColoredGraph::ColoredGraph(int color_count, std::vector<std::string> vertex_names,
                           const std::vector<std::tuple<int, int, int>>& edges)
    : color_count_(color_count), names_(std::move(vertex_names)) {
  if (color_count_ < 2) throw Error(Errc::BadParameter, "need at least two colors");
  const int nv = static_cast<int>(names_.size());
  adj_.assign(color_count_, std::vector<int>(nv, -1));
  for (const auto& [u, v, c] : edges) {
    if (u < 0 || u >= nv || v < 0 || v >= nv)
      throw Error(Errc::ValidationError, "vertex index out of range");
    if (c < 0 || c >= color_count_)
      throw Error(Errc::ColorOutOfRange, "color " + std::to_string(c));
    if (u == v)
      throw Error(Errc::LoopEdge, "loop at " + names_[u]);
    if (adj_[c][u] != -1 || adj_[c][v] != -1)
      throw Error(Errc::ColorClash, "color " + std::to_string(c) + " at " + names_[u] + "," + names_[v]);
    adj_[c][u] = v;
    adj_[c][v] = u;
  }
}

ColoredGraph ColoredGraph::build(int color_count, const std::vector<std::string>& vertex_names,
                                 const std::vector<std::tuple<std::string, std::string, int>>& edges) {
  std::map<std::string, int> idx;
  for (int i = 0; i < static_cast<int>(vertex_names.size()); ++i) {
    if (!idx.emplace(vertex_names[i], i).second)
      throw Error(Errc::ValidationError, "duplicate vertex name " + vertex_names[i]);
  }
  std::vector<std::tuple<int, int, int>> es;
  es.reserve(edges.size());
  for (const auto& [u, v, c] : edges) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu == idx.end() || iv == idx.end())
      throw Error(Errc::ValidationError, "unknown vertex in edge " + u + "," + v);
    es.emplace_back(iu->second, iv->second, c);
  }
  return ColoredGraph(color_count, vertex_names, es);
}

int ColoredGraph::index_of(const std::string& name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

int ColoredGraph::degree(int v) const {
  int d = 0;
  for (int c = 0; c < color_count_; ++c)
    if (adj_[c][v] != -1) ++d;
  return d;
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> es;
  for (int c = 0; c < color_count_; ++c)
    for (int u = 0; u < vertex_count(); ++u)
      if (adj_[c][u] > u) es.push_back({u, adj_[c][u], c});
  std::sort(es.begin(), es.end());
  return es;
}

int ColoredGraph::edge_count() const {
  int n = 0;
  for (int c = 0; c < color_count_; ++c)
    for (int u = 0; u < vertex_count(); ++u)
      if (adj_[c][u] > u) ++n;
  return n;
}

bool ColoredGraph::is_regular() const {
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != color_count_) return false;
  return true;
}

bool ColoredGraph::is_connected() const {
  const int nv = vertex_count();
  if (nv == 0) return true;
  std::vector<char> seen(nv, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int c = 0; c < color_count_; ++c) {
      int w = adj_[c][u];
      if (w != -1 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == nv;
}

ResidueDecomposition residues(const ColoredGraph& g, const std::vector<int>& color_subset) {
  for (int c : color_subset)
    if (c < 0 || c >= g.color_count())
      throw Error(Errc::ColorOutOfRange, "color " + std::to_string(c));
  ResidueDecomposition d;
  d.color_subset = color_subset;
  const int nv = g.vertex_count();
  std::vector<char> seen(nv, 0);
  for (int s = 0; s < nv; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int c : color_subset) {
        int w = g.neighbor(u, c);
        if (w != -1 && !seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    d.components.push_back(std::move(comp));
  }
  return d;
}

int pair_residue_count(const ColoredGraph& g, int i, int j) {
  return residues(g, {i, j}).count();
}

Bipartition is_bipartite(const ColoredGraph& g) {
  const int nv = g.vertex_count();
  Bipartition b;
  b.bipartite = true;
  b.vertex_class.assign(nv, -1);
  for (int s = 0; s < nv; ++s) {
    if (b.vertex_class[s] != -1) continue;
    b.vertex_class[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int c = 0; c < g.color_count(); ++c) {
        int w = g.neighbor(u, c);
        if (w == -1) continue;
        if (b.vertex_class[w] == -1) {
          b.vertex_class[w] = 1 - b.vertex_class[u];
          q.push(w);
        } else if (b.vertex_class[w] == b.vertex_class[u]) {
          b.bipartite = false;
          return b;
        }
      }
    }
  }
  return b;
}

bool is_contracted(const ColoredGraph& g) {
  if (!g.is_regular()) throw Error(Errc::NotRegular, "contractedness needs a regular graph");
  std::vector<int> all(g.color_count());
  for (int c = 0; c < g.color_count(); ++c) all[c] = c;
  for (int drop = 0; drop < g.color_count(); ++drop) {
    std::vector<int> rest;
    for (int c : all)
      if (c != drop) rest.push_back(c);
    if (residues(g, rest).count() != 1) return false;
  }
  return true;
}

BoundaryGraph boundary_graph(const ColoredGraph& g) {
  const int n = g.color_count();
  const int nv = g.vertex_count();
  std::vector<int> missing(nv, -1);  // per boundary vertex, -1 for internal
  std::vector<int> bidx(nv, -1);
  std::vector<std::string> bnames;
  for (int v = 0; v < nv; ++v) {
    int deg = g.degree(v);
    if (deg == n) continue;
    if (deg != n - 1)
      throw Error(Errc::NotBoundaryRegular, "vertex " + g.name(v) + " has degree " + std::to_string(deg));
    for (int c = 0; c < n; ++c)
      if (g.neighbor(v, c) == -1) missing[v] = c;
    bidx[v] = static_cast<int>(bnames.size());
    bnames.push_back(g.name(v));
  }

  std::vector<std::tuple<int, int, int>> bedges;
  for (int v = 0; v < nv; ++v) {
    if (bidx[v] == -1) continue;
    const int miss = missing[v];
    for (int i = 0; i < n; ++i) {
      if (i == miss) continue;
      // Maximal {i, miss}-alternating walk starting along color i; boundary
      // vertices that happen to carry both colors are passed through. The
      // start vertex lacks miss, so the walk lives on a path component and
      // terminates.
      int cur = g.neighbor(v, i);
      for (;;) {
        int nxt = g.neighbor(cur, miss);
        if (nxt == -1) break;  // cur lacks the missing color: end of the walk
        cur = g.neighbor(nxt, i);
        if (cur == -1)
          throw Error(Errc::AmbiguousMissingColor,
                      "walk from " + g.name(v) + " ends at a vertex missing color " +
                          std::to_string(i) + ", not " + std::to_string(miss));
      }
      if (bidx[cur] == -1)
        throw Error(Errc::AmbiguousMissingColor, "walk from " + g.name(v));
      if (missing[cur] != miss)
        throw Error(Errc::AmbiguousMissingColor,
                    "walk from " + g.name(v) + " ends at vertex with different missing color");
      if (bidx[v] < bidx[cur]) bedges.emplace_back(bidx[v], bidx[cur], i);
    }
  }
  std::sort(bedges.begin(), bedges.end());
  bedges.erase(std::unique(bedges.begin(), bedges.end()), bedges.end());

  BoundaryGraph out{ColoredGraph(n, bnames, bedges), {}, {}};
  auto comps = residues(out.graph, [&] {
    std::vector<int> all(n);
    for (int c = 0; c < n; ++c) all[c] = c;
    return all;
  }());
  for (const auto& comp : comps.components) {
    int miss = missing[g.index_of(out.graph.name(comp[0]))];
    for (int w : comp)
      if (missing[g.index_of(out.graph.name(w))] != miss)
        throw Error(Errc::AmbiguousMissingColor, "mixed missing colors in one boundary component");
    out.components.push_back(comp);
    out.missing_color.push_back(miss);
  }
  return out;
}

}  // namespace gem
