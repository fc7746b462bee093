#include "gem/group.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>

namespace gem {

GroupPresentation fundamental_group(const ColoredGraph& g, int i, int j) {
  const int n = g.color_count();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n)
    throw Error(Errc::BadColors, "need two distinct colors in range");
  if (!g.is_regular() || !g.is_connected() || !is_contracted(g))
    throw Error(Errc::NotContracted, "fundamental group needs a crystallization");

  std::vector<int> rest;
  for (int c = 0; c < n; ++c)
    if (c != i && c != j) rest.push_back(c);
  auto gens = residues(g, rest);  // components ordered by least vertex
  const int total = gens.count();
  // Drop the component containing the largest least-vertex id: the last one.
  const int dropped = total - 1;
  std::vector<int> comp_of(g.vertex_count(), -1);
  for (int kcomp = 0; kcomp < total; ++kcomp)
    for (int v : gens.components[kcomp]) comp_of[v] = kcomp;

  auto cycles = residues(g, {i, j});
  int keep = cycles.count();
  if (n >= 4 && keep > 0) --keep;  // for d >= 3 one cycle is redundant

  GroupPresentation p;
  p.generator_count = total - 1;
  p.color_i = i;
  p.color_j = j;
  p.dropped_component = dropped;
  for (int kcyc = 0; kcyc < keep; ++kcyc) {
    const auto& comp = cycles.components[kcyc];
    int v1 = comp[0];
    // Alternating traversal v1 -i- v2 -j- v3 -i- ... -j- v1.
    std::vector<int> visited;
    int cur = v1;
    int color = i;
    do {
      visited.push_back(cur);
      cur = g.neighbor(cur, color);
      color = (color == i) ? j : i;
    } while (cur != v1);
    const int len = static_cast<int>(visited.size());
    std::vector<int> word;
    for (int h = 2; h <= len; ++h) {
      int gen = comp_of[visited[h - 1]];
      if (gen == dropped) continue;
      word.push_back(h % 2 == 0 ? gen + 1 : -(gen + 1));
    }
    int gen1 = comp_of[v1];
    if (gen1 != dropped) word.push_back(-(gen1 + 1));
    p.relators.push_back(std::move(word));
  }
  return p;
}

namespace {

// Elimination runs in 128-bit: the transform entries can outgrow 64 bits
// mid-computation even when every final value fits.
using Wide = __int128;
using Mat = std::vector<std::vector<Wide>>;

Mat identity(int n) {
  Mat m(n, std::vector<Wide>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Wide wabs(Wide x) { return x < 0 ? -x : x; }

// Round-to-nearest quotient keeps remainders at most |b|/2, which tames the
// coefficient growth of the elimination.
Wide nearest(Wide a, Wide b) {
  Wide q = a / b, r = a % b;
  if (2 * wabs(r) > wabs(b)) q += (a < 0) == (b < 0) ? 1 : -1;
  return q;
}

// g = s*a + w*b, with small cofactors.
Wide extgcd(Wide a, Wide b, Wide& s, Wide& w) {
  if (b == 0) {
    s = a < 0 ? -1 : 1;
    w = 0;
    return wabs(a);
  }
  Wide s1, w1;
  Wide g = extgcd(b, a % b, s1, w1);
  s = w1;
  w = s1 - (a / b) * w1;
  return g;
}

long long narrow(Wide x) {
  if (x > INT64_MAX || x < INT64_MIN)
    throw Error(Errc::ConstructionInvalid, "normal-form transform entry exceeds 64 bits");
  return static_cast<long long>(x);
}

// Row ops on (a, u); column ops on (a, v).
void row_add(Mat& a, Mat& u, int dst, int src, Wide f) {
  for (size_t k = 0; k < a[dst].size(); ++k) a[dst][k] += f * a[src][k];
  for (size_t k = 0; k < u[dst].size(); ++k) u[dst][k] += f * u[src][k];
}
void row_swap(Mat& a, Mat& u, int r1, int r2) {
  std::swap(a[r1], a[r2]);
  std::swap(u[r1], u[r2]);
}
void row_neg(Mat& a, Mat& u, int r) {
  for (auto& x : a[r]) x = -x;
  for (auto& x : u[r]) x = -x;
}
void col_add(Mat& a, Mat& v, int dst, int src, Wide f) {
  for (auto& row : a) row[dst] += f * row[src];
  for (auto& row : v) row[dst] += f * row[src];
}
void col_swap(Mat& a, Mat& v, int c1, int c2) {
  for (auto& row : a) std::swap(row[c1], row[c2]);
  for (auto& row : v) std::swap(row[c1], row[c2]);
}

// Unimodular 2x2 transform on rows (t, r), pivoting on column c: afterwards
// a[t][c] = gcd and a[r][c] = 0. One shot per entry keeps the coefficient
// growth far below the remainder-and-swap Euclid.
void rows_bezout(Mat& a, Mat& u, int t, int r, int c) {
  Wide p = a[t][c], x = a[r][c];
  if (x == 0) return;
  if (p != 0 && x % p == 0) {
    row_add(a, u, r, t, -nearest(x, p));
    return;
  }
  Wide s, w;
  Wide g = extgcd(p, x, s, w);
  Wide mp = p / g, mx = x / g;
  auto apply = [&](std::vector<Wide>& rt, std::vector<Wide>& rr) {
    for (size_t k = 0; k < rt.size(); ++k) {
      Wide nt = s * rt[k] + w * rr[k];
      Wide nr = mp * rr[k] - mx * rt[k];
      rt[k] = nt;
      rr[k] = nr;
    }
  };
  apply(a[t], a[r]);
  apply(u[t], u[r]);
}

void cols_bezout(Mat& a, Mat& v, int t, int c, int r) {
  Wide p = a[r][t], x = a[r][c];
  if (x == 0) return;
  if (p != 0 && x % p == 0) {
    col_add(a, v, c, t, -nearest(x, p));
    return;
  }
  Wide s, w;
  Wide g = extgcd(p, x, s, w);
  Wide mp = p / g, mx = x / g;
  auto apply = [&](std::vector<std::vector<Wide>>& m) {
    for (auto& row : m) {
      Wide nt = s * row[t] + w * row[c];
      Wide nc = mp * row[c] - mx * row[t];
      row[t] = nt;
      row[c] = nc;
    }
  };
  apply(a);
  apply(v);
}

}  // namespace

namespace {

// One elimination attempt, seeded with a row/column permutation (a unimodular
// starting point, absorbed into u and v). The transform entries produced by
// the elimination occasionally outgrow 64 bits on an unlucky path; the caller
// retries with a different permutation, which in practice settles quickly.
SmithResult snf_attempt(const std::vector<std::vector<long long>>& input,
                        const std::vector<int>& pr, const std::vector<int>& pc) {
  const int rows = static_cast<int>(input.size());
  const int cols = rows ? static_cast<int>(input[0].size()) : 0;
  Mat a(rows, std::vector<Wide>(cols));
  Mat u(rows, std::vector<Wide>(rows, 0)), v(cols, std::vector<Wide>(cols, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = input[pr[r]][pc[c]];
  for (int r = 0; r < rows; ++r) u[r][pr[r]] = 1;
  for (int c = 0; c < cols; ++c) v[pc[c]][c] = 1;
  const int rank_max = std::min(rows, cols);

  // Alternate row and column Hermite passes until the matrix is diagonal.
  // Reducing the entries off the pivot modulo the pivot every pass keeps the
  // working values (and so the transforms) from compounding.
  for (;;) {
    // Pick the smallest nonzero entry of the remaining block as the pivot:
    // small pivots keep the Bezout cofactors small.
    auto pick = [&](int t) {
      int pr = -1, pc = -1;
      Wide best = 0;
      for (int r = t; r < rows; ++r)
        for (int c = t; c < cols; ++c)
          if (a[r][c] != 0 && (pr == -1 || wabs(a[r][c]) < best)) {
            best = wabs(a[r][c]);
            pr = r;
            pc = c;
          }
      if (pr != -1) {
        row_swap(a, u, t, pr);
        col_swap(a, v, t, pc);
      }
      return pr != -1;
    };
    // Row pass: clear below each pivot, reduce above it mod pivot.
    for (int t = 0; t < rank_max; ++t) {
      if (!pick(t)) break;
      for (int r = t + 1; r < rows; ++r) rows_bezout(a, u, t, r, t);
      if (a[t][t] < 0) row_neg(a, u, t);
      for (int r = 0; r < t; ++r)
        if (a[r][t] != 0) row_add(a, u, r, t, -nearest(a[r][t], a[t][t]));
    }
    // Column pass, symmetric.
    for (int t = 0; t < rank_max; ++t) {
      if (a[t][t] == 0 && !pick(t)) break;
      for (int c = t + 1; c < cols; ++c) cols_bezout(a, v, t, c, t);
      if (a[t][t] < 0) row_neg(a, u, t);
      for (int c = 0; c < t; ++c)
        if (a[t][c] != 0) col_add(a, v, c, t, -nearest(a[t][c], a[t][t]));
    }
    bool diagonal = true;
    for (int r = 0; r < rows && diagonal; ++r)
      for (int c = 0; c < cols; ++c)
        if (r != c && a[r][c] != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
  }
  for (int t = 0; t < rank_max; ++t)
    if (a[t][t] < 0) row_neg(a, u, t);

  // Divisibility chain, repaired pairwise on the diagonal: fold d_j into the
  // d_i row and rerun the two-position Euclid, which replaces (d_i, d_j) by
  // (gcd, +-lcm). Values stay bounded by the lcm, unlike folding during the
  // elimination above.
  for (bool dirty = true; dirty;) {
    dirty = false;
    for (int i = 0; i + 1 < rank_max; ++i) {
      int j = i + 1;
      // zero diagonal entries trail (the elimination stops at an empty block)
      if (a[i][i] != 0 && a[j][j] != 0 && a[j][j] % a[i][i] != 0) {
        dirty = true;
        row_add(a, u, i, j, 1);      // row i becomes (d_i, d_j)
        cols_bezout(a, v, i, j, i);  // (gcd, 0) on row i; fill at a[j][i]
        rows_bezout(a, u, i, j, i);  // gcd | fill, so this is a plain row op
        if (a[i][i] < 0) row_neg(a, u, i);
        if (a[j][j] < 0) row_neg(a, u, j);
      }
    }
  }

  // Rows of u past the rank span the left kernel of the input, so adding
  // their multiples anywhere changes nothing in the product; same for the
  // trailing columns of v and the right kernel. Size-reducing against them
  // strips the large kernel components the elimination leaves behind.
  // Approximate quotients are fine: any integer multiple is a valid op.
  int rank = 0;
  for (int t = 0; t < rank_max; ++t)
    if (a[t][t] != 0) ++rank;
  auto norm_row = [&](int r) {
    long double nn = 0;
    for (int k = 0; k < rows; ++k)
      nn += static_cast<long double>(u[r][k]) * static_cast<long double>(u[r][k]);
    return nn;
  };
  auto norm_col = [&](int c) {
    long double nn = 0;
    for (int k = 0; k < cols; ++k)
      nn += static_cast<long double>(v[k][c]) * static_cast<long double>(v[k][c]);
    return nn;
  };
  auto reduce_row = [&](int target, int by) {
    for (;;) {
      long double dot = 0, nn = norm_row(by);
      for (int k = 0; k < rows; ++k)
        dot += static_cast<long double>(u[target][k]) * static_cast<long double>(u[by][k]);
      if (nn == 0) return;
      long long q = llroundl(dot / nn);
      if (q == 0) return;
      long double before = norm_row(target);
      row_add(a, u, target, by, -static_cast<Wide>(q));
      if (norm_row(target) >= before) {  // rounding noise: undo and stop
        row_add(a, u, target, by, static_cast<Wide>(q));
        return;
      }
    }
  };
  auto reduce_col = [&](int target, int by) {
    for (;;) {
      long double dot = 0, nn = norm_col(by);
      for (int k = 0; k < cols; ++k)
        dot += static_cast<long double>(v[k][target]) * static_cast<long double>(v[k][by]);
      if (nn == 0) return;
      long long q = llroundl(dot / nn);
      if (q == 0) return;
      long double before = norm_col(target);
      col_add(a, v, target, by, -static_cast<Wide>(q));
      if (norm_col(target) >= before) {
        col_add(a, v, target, by, static_cast<Wide>(q));
        return;
      }
    }
  };
  // For equal diagonal entries d_i = d_j the pair op "u row i += q * u row j,
  // v col j -= q * v col i" also leaves the product alone; accept it whenever
  // it shrinks the two vectors it touches combined.
  auto reduce_pair = [&](int i, int j) {
    auto apply = [&](Wide f) {
      for (int k = 0; k < rows; ++k) u[i][k] -= f * u[j][k];
      for (int k = 0; k < cols; ++k) v[k][j] += f * v[k][i];
    };
    for (;;) {
      // Two candidate multiples: one aimed at u's row i, one at v's col j.
      long double du = 0, nu = norm_row(j), dv = 0, nv = norm_col(i);
      for (int k = 0; k < rows; ++k)
        du += static_cast<long double>(u[i][k]) * static_cast<long double>(u[j][k]);
      for (int k = 0; k < cols; ++k)
        dv += static_cast<long double>(v[k][j]) * static_cast<long double>(v[k][i]);
      long long qu = nu == 0 ? 0 : llroundl(du / nu);
      long long qv = nv == 0 ? 0 : -llroundl(dv / nv);
      bool moved = false;
      for (long long q : {qu, qv}) {
        if (q == 0) continue;
        long double before = norm_row(i) + norm_col(j);
        apply(static_cast<Wide>(q));
        if (norm_row(i) + norm_col(j) >= before)
          apply(static_cast<Wide>(-q));
        else
          moved = true;
      }
      if (!moved) return;
    }
  };
  for (int pass = 0; pass < 4; ++pass) {
    for (int by = rank; by < rows; ++by)
      for (int r = 0; r < rows; ++r)
        if (r != by) reduce_row(r, by);
    for (int by = rank; by < cols; ++by)
      for (int c = 0; c < cols; ++c)
        if (c != by) reduce_col(c, by);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        if (i != j && a[i][i] == a[j][j]) reduce_pair(i, j);
  }

  SmithResult res;
  res.u.assign(rows, std::vector<long long>(rows));
  res.v.assign(cols, std::vector<long long>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < rows; ++c) res.u[r][c] = narrow(u[r][c]);
  for (int r = 0; r < cols; ++r)
    for (int c = 0; c < cols; ++c) res.v[r][c] = narrow(v[r][c]);
  res.diag.resize(rank_max);
  for (int t = 0; t < rank_max; ++t) res.diag[t] = narrow(a[t][t]);
  return res;
}

}  // namespace

SmithResult smith_normal_form(std::vector<std::vector<long long>> input) {
  const int rows = static_cast<int>(input.size());
  const int cols = rows ? static_cast<int>(input[0].size()) : 0;
  std::vector<int> pr(rows), pc(cols);
  for (int r = 0; r < rows; ++r) pr[r] = r;
  for (int c = 0; c < cols; ++c) pc[c] = c;
  std::mt19937 rng(12345);
  for (int attempt = 0;; ++attempt) {
    try {
      return snf_attempt(input, pr, pc);
    } catch (const Error&) {
      if (attempt >= 32) throw;
      std::shuffle(pr.begin(), pr.end(), rng);
      std::shuffle(pc.begin(), pc.end(), rng);
    }
  }
}

AbelianInvariants first_homology(const GroupPresentation& p) {
  AbelianInvariants inv;
  const int s = p.generator_count;
  if (s == 0) return inv;
  std::vector<std::vector<long long>> a(p.relators.size(), std::vector<long long>(s, 0));
  for (size_t r = 0; r < p.relators.size(); ++r)
    for (int signed_gen : p.relators[r]) {
      int g = std::abs(signed_gen) - 1;
      a[r][g] += signed_gen > 0 ? 1 : -1;
    }
  if (a.empty()) {
    inv.free_rank = s;
    return inv;
  }
  auto snf = smith_normal_form(std::move(a));
  long long rank = 0;
  for (long long dgl : snf.diag)
    if (dgl != 0) ++rank;
  inv.free_rank = s - rank;
  for (long long dgl : snf.diag)
    if (dgl > 1) inv.torsion.push_back(dgl);
  return inv;
}

}  // namespace gem
