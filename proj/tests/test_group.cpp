#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <numeric>
#include <random>

#include "gem/catalog.hpp"
#include "gem/group.hpp"

using namespace gem;

namespace {

using Matrix = std::vector<std::vector<long long>>;

using Wide = __int128;
using WideMatrix = std::vector<std::vector<Wide>>;

WideMatrix widen(const Matrix& a) {
  WideMatrix out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i].assign(a[i].begin(), a[i].end());
  return out;
}

WideMatrix multiply(const WideMatrix& a, const WideMatrix& b) {
  size_t n = a.size(), m = b[0].size(), k = b.size();
  WideMatrix out(n, std::vector<Wide>(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
  return out;
}

// Determinant mod a prime, for unimodularity checks on matrices whose exact
// determinant would overflow.
long long det_mod(const Matrix& a, long long p) {
  size_t n = a.size();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = ((a[i][j] % p) + p) % p;
  auto power = [&](long long b, long long e) {
    long long r = 1;
    for (b %= p; e; e >>= 1, b = (Wide)b * b % p)
      if (e & 1) r = (Wide)r * b % p;
    return r;
  };
  long long d = 1;
  for (size_t k = 0; k < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      d = p - d;
    }
    d = (Wide)d * m[k][k] % p;
    long long inv = power(m[k][k], p - 2);
    for (size_t i = k + 1; i < n; ++i) {
      long long f = (Wide)m[i][k] * inv % p;
      for (size_t j = k; j < n; ++j) m[i][j] = ((m[i][j] - (Wide)f * m[k][j]) % p + p) % p;
    }
  }
  return d;
}

bool unimodular(const Matrix& a) {
  for (long long p : {1000000007LL, 998244353LL}) {
    long long d = det_mod(a, p);
    if (d != 1 && d != p - 1) return false;
  }
  return true;
}

long long det(Matrix a) {
  // Bareiss, exact over the integers
  size_t n = a.size();
  long long prev = 1, sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return n == 0 ? 1 : sign * a[n - 1][n - 1];
}

// gcd of all k x k minors; an invariant route to the diagonal that shares no
// code with the elimination in smith_normal_form.
long long determinantal_divisor(const Matrix& a, size_t k) {
  size_t rows = a.size(), cols = a[0].size();
  std::vector<size_t> ri(k), ci(k);
  long long g = 0;
  std::function<void(size_t, size_t)> pick_cols = [&](size_t depth, size_t start) {
    if (depth == k) {
      Matrix minor(k, std::vector<long long>(k));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j) minor[i][j] = a[ri[i]][ci[j]];
      g = std::gcd(g, det(minor));
      return;
    }
    for (size_t c = start; c < cols; ++c) {
      ci[depth] = c;
      pick_cols(depth + 1, c + 1);
    }
  };
  std::function<void(size_t, size_t)> pick_rows = [&](size_t depth, size_t start) {
    if (depth == k) {
      pick_cols(0, 0);
      return;
    }
    for (size_t r = start; r < rows; ++r) {
      ri[depth] = r;
      pick_rows(depth + 1, r + 1);
    }
  };
  pick_rows(0, 0);
  return g < 0 ? -g : g;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  auto r = smith_normal_form({{2}});
  CHECK(r.diag == std::vector<long long>{2});
  r = smith_normal_form({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  CHECK(r.diag == std::vector<long long>{2, 2, 156});  // classic textbook instance
  r = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(r.diag == std::vector<long long>{0, 0});
}

TEST_CASE("smith normal form against determinantal divisors, with recomposition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    size_t rows = dim(rng), cols = dim(rng);
    Matrix a(rows, std::vector<long long>(cols));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);

    auto r = smith_normal_form(a);
    REQUIRE(r.diag.size() == std::min(rows, cols));

    // U and V are unimodular and U*A*V is the diagonal
    CHECK(unimodular(r.u));
    CHECK(unimodular(r.v));
    auto d = multiply(multiply(widen(r.u), widen(a)), widen(r.v));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        bool match = d[i][j] == (Wide)(i == j && i < r.diag.size() ? r.diag[i] : 0);
        CHECK(match);
      }

    // divisibility chain
    for (size_t i = 0; i + 1 < r.diag.size(); ++i) {
      CHECK(r.diag[i] >= 0);
      if (r.diag[i + 1] != 0) CHECK(r.diag[i + 1] % std::max<long long>(r.diag[i], 1) == 0);
      if (r.diag[i] == 0) CHECK(r.diag[i + 1] == 0);
    }

    // diag[k-1] = D_k / D_{k-1} where D_k is the k-th determinantal divisor
    long long prev = 1;
    for (size_t k = 1; k <= r.diag.size(); ++k) {
      long long dk = determinantal_divisor(a, k);
      CHECK(r.diag[k - 1] == (prev == 0 ? 0 : dk / prev));
      prev = dk;
      if (prev == 0) break;
    }
  }
}

TEST_CASE("presentations from crystallizations") {
  auto p = fundamental_group(lens(3).graph, 0, 1);
  CHECK(first_homology(p) == AbelianInvariants{0, {3}});

  // a crystallization of S^3: trivial group
  CHECK(first_homology(fundamental_group(sphere(3).graph, 1, 2)) == AbelianInvariants{0, {}});

  // the surface relator survives abelianization for the torus: H1 = Z^2
  auto t = fundamental_group(surface(SurfaceKind::Torus).graph, 0, 1);
  CHECK(t.generator_count == 2);
  CHECK(first_homology(t) == AbelianInvariants{2, {}});
}

TEST_CASE("homology does not depend on the chosen color pair") {
  for (const CatalogEntry& e : {lens(3), sphere_bundle(3, false), projective(3)}) {
    const auto& g = e.graph;
    auto reference = first_homology(fundamental_group(g, 0, 1));
    for (int i = 0; i < g.color_count(); ++i)
      for (int j = i + 1; j < g.color_count(); ++j)
        CHECK(first_homology(fundamental_group(g, i, j)) == reference);
  }
}

TEST_CASE("free groups abelianize to free abelian groups") {
  GroupPresentation p;
  p.generator_count = 3;
  CHECK(first_homology(p) == AbelianInvariants{3, {}});
  p.relators.push_back({1, 2, -1, -2});  // commutator dies in H1
  CHECK(first_homology(p) == AbelianInvariants{3, {}});
}
