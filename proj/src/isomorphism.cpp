#include "gem/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace gem {

bool validate_shift_isomorphism(const ColoredGraph& g, const ShiftIsomorphism& iso) {
  const int nv = g.vertex_count();
  const int n = g.color_count();
  if (static_cast<int>(iso.vertex_map.size()) != nv) return false;
  std::vector<char> hit(nv, 0);
  for (int v = 0; v < nv; ++v) {
    int w = iso.vertex_map[v];
    if (w < 0 || w >= nv || hit[w]) return false;
    hit[w] = 1;
  }
  int k = ((iso.shift % n) + n) % n;
  for (int c = 0; c < n; ++c) {
    for (int u = 0; u < nv; ++u) {
      int v = g.neighbor(u, c);
      int image = g.neighbor(iso.vertex_map[u], (c + k) % n);
      if (v == -1) {
        if (image != -1) return false;
      } else if (image != iso.vertex_map[v]) {
        return false;
      }
    }
  }
  return true;
}

namespace {

// Propagate the forced vertex map given color_map and image of vertex 0.
// A regular connected colored graph is rigid once one image is fixed.
std::optional<std::vector<int>> propagate(const ColoredGraph& g, const ColoredGraph& h,
                                          const std::vector<int>& color_map, int image0) {
  const int nv = g.vertex_count();
  std::vector<int> map(nv, -1);
  std::vector<char> used(nv, 0);
  map[0] = image0;
  used[image0] = 1;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int c = 0; c < g.color_count(); ++c) {
      int v = g.neighbor(u, c);
      if (v == -1) continue;
      int w = h.neighbor(map[u], color_map[c]);
      if (w == -1) return std::nullopt;
      if (map[v] == -1) {
        if (used[w]) return std::nullopt;
        map[v] = w;
        used[w] = 1;
        q.push(v);
      } else if (map[v] != w) {
        return std::nullopt;
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    if (map[v] == -1) return std::nullopt;  // disconnected source
  return map;
}

}  // namespace

std::vector<ShiftIsomorphism> find_shift_isomorphisms(const ColoredGraph& g, int shift) {
  if (!g.is_regular()) throw Error(Errc::NotRegular, "shift search needs a regular graph");
  if (!g.is_connected()) throw Error(Errc::Disconnected, "shift search needs a connected graph");
  const int n = g.color_count();
  int k = ((shift % n) + n) % n;
  std::vector<int> color_map(n);
  for (int c = 0; c < n; ++c) color_map[c] = (c + k) % n;
  std::vector<ShiftIsomorphism> out;
  for (int image0 = 0; image0 < g.vertex_count(); ++image0) {
    if (auto map = propagate(g, g, color_map, image0)) out.push_back({k, std::move(*map)});
  }
  std::sort(out.begin(), out.end(),
            [](const ShiftIsomorphism& a, const ShiftIsomorphism& b) { return a.vertex_map < b.vertex_map; });
  return out;
}

std::optional<ColorIsomorphism> is_isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                              bool allow_color_permutation) {
  if (g.vertex_count() != h.vertex_count() || g.color_count() != h.color_count())
    return std::nullopt;
  if (g.vertex_count() == 0) return ColorIsomorphism{{}, {}};
  const int n = g.color_count();

  // Pair-residue counts must agree under the color map; prunes most
  // permutations before any propagation is attempted.
  std::vector<std::vector<int>> gp(n, std::vector<int>(n, 0)), hp = gp;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      gp[i][j] = gp[j][i] = pair_residue_count(g, i, j);
      hp[i][j] = hp[j][i] = pair_residue_count(h, i, j);
    }

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (gp[i][j] != hp[perm[i]][perm[j]]) ok = false;
    if (ok) {
      for (int image0 = 0; image0 < h.vertex_count(); ++image0) {
        if (auto map = propagate(g, h, perm, image0)) return ColorIsomorphism{perm, std::move(*map)};
      }
    }
    if (!allow_color_permutation) break;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

ColoredGraph extract_component(const ColoredGraph& g, const std::vector<int>& vertices) {
  std::vector<int> local(g.vertex_count(), -1);
  std::vector<std::string> names;
  for (int v : vertices) {
    local[v] = static_cast<int>(names.size());
    names.push_back(g.name(v));
  }
  std::vector<char> color_used(g.color_count(), 0);
  for (int v : vertices)
    for (int c = 0; c < g.color_count(); ++c)
      if (g.neighbor(v, c) != -1 && local[g.neighbor(v, c)] != -1) color_used[c] = 1;
  std::vector<int> color_new(g.color_count(), -1);
  int nc = 0;
  for (int c = 0; c < g.color_count(); ++c)
    if (color_used[c]) color_new[c] = nc++;
  std::vector<std::tuple<int, int, int>> edges;
  for (int v : vertices)
    for (int c = 0; c < g.color_count(); ++c) {
      int w = g.neighbor(v, c);
      if (w != -1 && local[w] > local[v]) edges.emplace_back(local[v], local[w], color_new[c]);
    }
  return ColoredGraph(nc, names, edges);
}

}  // namespace gem
