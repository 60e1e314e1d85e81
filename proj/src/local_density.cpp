#include "ikeda/local_density.hpp"

#include <array>
#include <cmath>
#include <map>

#include "ikeda/error.hpp"
#include "ikeda/jordan.hpp"

namespace ikeda {

namespace {

constexpr int kMaxSize = 4;

long pvalue(long x, long p) {
  long v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

long inverse_mod(long a, long mod) {
  long t = 0, nt = 1, r = mod, nr = ((a % mod) + mod) % mod;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  return ((t % mod) + mod) % mod;
}

/// Valuation and unit-inverse tables for Z/p^e.
struct ResidueTables {
  std::vector<int> val;    ///< val[x] for 0 < x < mod
  std::vector<long> inv;   ///< inv[u] for units u
  std::vector<long> ppow;  ///< p^0 .. p^e
};

ResidueTables residue_tables(long p, int e, long mod) {
  ResidueTables t{std::vector<int>(mod, e), std::vector<long>(mod, 0), {1}};
  for (int i = 1; i <= e; ++i) t.ppow.push_back(t.ppow.back() * p);
  for (long x = 1; x < mod; ++x) {
    t.val[x] = static_cast<int>(pvalue(x, p));
    if (t.val[x] == 0) t.inv[x] = inverse_mod(x, mod);
  }
  return t;
}

/// sum_i (e - min(lambda_i, e)) for an m x m matrix over Z/p^e.
int smith_weight(std::array<std::array<long, kMaxSize>, kMaxSize> A, int m, int e, long mod,
                 const ResidueTables& tab) {
  int w = 0;
  for (int s = 0; s < m; ++s) {
    int bv = e, bi = -1, bj = -1;
    for (int i = s; i < m && bv > 0; ++i)
      for (int j = s; j < m; ++j) {
        int v = tab.val[A[i][j]];
        if (v < bv) {
          bv = v, bi = i, bj = j;
          if (v == 0) break;
        }
      }
    if (bi < 0) break;
    w += e - bv;
    std::swap(A[s], A[bi]);
    for (int i = s; i < m; ++i) std::swap(A[i][s], A[i][bj]);
    const long pv = tab.ppow[bv];
    const long uinv = tab.inv[A[s][s] / pv];
    // Row operations clear column s; the pivot divides every entry, so the
    // column operations on row s only zero it and leave the rest unchanged.
    for (int i = s + 1; i < m; ++i) {
      long f = (A[i][s] / pv) * uinv % mod;
      if (f == 0) continue;
      for (int j = s + 1; j < m; ++j) {
        long x = (A[i][j] - f * A[s][j]) % mod;
        A[i][j] = x < 0 ? x + mod : x;
      }
    }
  }
  return w;
}

}  // namespace

Poly density_polynomial_at_depth(const HalfIntegralMatrix& T, long p, int e) {
  const int m = static_cast<int>(T.size());
  if (m > kMaxSize) throw ConfigError("density oracle supports sizes up to 4");
  const int slots = m * (m + 1) / 2;
  if (std::pow(static_cast<double>(p), double(e) * slots) > kOracleCandidateGuard)
    throw BoundError("density oracle refuses " + std::to_string(p) + "^" +
                     std::to_string(e * slots) + " candidates");
  long mod = 1;
  for (int t = 0; t < e; ++t) mod *= p;
  const long top = mod / p;

  std::vector<std::pair<int, int>> idx;
  std::vector<long> weight;  // tr(TY) = sum weight * Y_ij over the upper triangle
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      idx.emplace_back(i, j);
      long c = i == j ? T.two_t(i, i) / 2 : T.two_t(i, j);
      weight.push_back(((c % mod) + mod) % mod);
    }
  const ResidueTables tab = residue_tables(p, e, mod);
  std::vector<long> vals(slots, 0);
  std::vector<std::array<long, 2>> counts(static_cast<std::size_t>(e * m + 1), {0, 0});
  std::array<std::array<long, kMaxSize>, kMaxSize> Y{};
  long tr = 0;
  while (true) {
    if (tr == 0 || tr % top == 0) {
      int w = smith_weight(Y, m, e, mod, tab);
      if (tr == 0)
        ++counts[w][0];
      else
        ++counts[w][1];
    }
    int s = 0;
    for (; s < slots; ++s) {
      auto [i, j] = idx[s];
      if (++vals[s] < mod) {
        Y[i][j] = Y[j][i] = vals[s];
        tr = (tr + weight[s]) % mod;
        break;
      }
      vals[s] = 0;
      Y[i][j] = Y[j][i] = 0;
      tr = ((tr - weight[s] * (mod - 1)) % mod + mod) % mod;
    }
    if (s == slots) break;
  }
  std::vector<Rat> c;
  for (const auto& ct : counts) c.push_back(Rat(ct[0]) - Rat(ct[1]) / Rat(p - 1));
  return Poly(std::move(c));
}

int starting_depth(const HalfIntegralMatrix& T, long p) {
  long top = 0;
  for (const auto& b : jordan(T, p).blocks) top = std::max(top, b.exponent);
  return static_cast<int>(top) + 1;
}

DensityPoly density_polynomial(const HalfIntegralMatrix& T, long p, int maxDepth) {
  const int e0 = starting_depth(T, p);
  Poly prev = density_polynomial_at_depth(T, p, e0);
  for (int e = e0 + 1; e <= maxDepth; ++e) {
    Poly cur = density_polynomial_at_depth(T, p, e);
    if (cur == prev) return {p, cur, e};
    prev = std::move(cur);
  }
  throw ConsistencyError("density oracle did not stabilize by depth " + std::to_string(maxDepth) +
                         " for 2T=" + T.to_string() + " at p=" + std::to_string(p));
}

Rat local_density(const HalfIntegralMatrix& T, long p, long k, int maxDepth) {
  return density_polynomial(T, p, maxDepth).alpha(rpow(Rat(p), -k));
}

namespace {

struct LiftCounter {
  long p;
  int m;
  long rowsX;  // 2k
  int e;
  std::vector<long> target;  // T_ii on the diagonal slots, 2T_ij off it
  std::vector<std::pair<int, int>> idx;

  // X stored column-major: X[c * rowsX + r]
  long form(const std::vector<long>& X, int i, int j) const {
    long s = 0;
    for (long l = 0; l < rowsX; l += 2) {
      const long a1 = X[i * rowsX + l], b1 = X[i * rowsX + l + 1];
      const long a2 = X[j * rowsX + l], b2 = X[j * rowsX + l + 1];
      s += i == j ? a1 * b1 : a1 * b2 + b1 * a2;
    }
    return s;
  }

  bool solves(const std::vector<long>& X, long mod) const {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      long v = form(X, idx[s].first, idx[s].second) - target[s];
      if (v % mod != 0) return false;
    }
    return true;
  }

  long count(std::vector<long>& X, int level, long modLevel) const {
    // X solves the system mod p^level; add digits at p^level.
    if (level == e) return 1;
    const long next = modLevel * p;
    const std::size_t cells = X.size();
    std::vector<long> digit(cells, 0);
    std::vector<long> base = X;
    long total = 0;
    while (true) {
      for (std::size_t c = 0; c < cells; ++c) X[c] = base[c] + modLevel * digit[c];
      if (solves(X, next)) total += count(X, level + 1, next);
      std::size_t c = 0;
      for (; c < cells; ++c) {
        if (++digit[c] < p) break;
        digit[c] = 0;
      }
      if (c == cells) break;
    }
    X = base;
    return total;
  }
};

}  // namespace

Rat literal_density(const HalfIntegralMatrix& T, long p, long k, int e) {
  const int m = static_cast<int>(T.size());
  const long cells = 2 * k * m;
  if (std::pow(static_cast<double>(p), double(cells)) > 1e7)
    throw BoundError("literal_density: level enumeration too large");
  LiftCounter lc{p, m, 2 * k, e, {}, {}};
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      lc.idx.emplace_back(i, j);
      lc.target.push_back(i == j ? T.two_t(i, i) / 2 : T.two_t(i, j));
    }
  std::vector<long> X(cells, 0);
  long n = lc.count(X, 0, 1);
  long expo = static_cast<long>(e) * (m * (m + 1) / 2 - 2 * k * m);
  return Rat(n) * rpow(Rat(p), expo);
}

}  // namespace ikeda
