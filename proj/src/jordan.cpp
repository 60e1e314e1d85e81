#include "ikeda/jordan.hpp"

#include <algorithm>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"

namespace ikeda {

namespace {

long val(const Rat& x, long p) { return valuation(x, p); }

RatSquare permute(const RatSquare& A, const std::vector<std::size_t>& perm) {
  RatSquare B(perm.size(), std::vector<Rat>(perm.size()));
  for (std::size_t a = 0; a < perm.size(); ++a)
    for (std::size_t b = 0; b < perm.size(); ++b) B[a][b] = A[perm[a]][perm[b]];
  return B;
}

std::vector<std::size_t> front(std::size_t n, std::vector<std::size_t> first) {
  for (std::size_t k = 0; k < n; ++k)
    if (std::find(first.begin(), first.end(), k) == first.end()) first.push_back(k);
  return first;
}

int legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  return kronecker(a, p);
}

}  // namespace

long JordanSplitting::det_valuation() const {
  long v = 0;
  for (const auto& b : blocks) v += b.exponent * static_cast<long>(b.unit.size());
  return v;
}

std::size_t JordanSplitting::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += b.unit.size();
  return r;
}

RatSquare to_rat(const HalfIntegralMatrix& T) {
  RatSquare A(T.size(), std::vector<Rat>(T.size()));
  for (std::size_t i = 0; i < T.size(); ++i)
    for (std::size_t j = 0; j < T.size(); ++j) A[i][j] = T.two_t(i, j);
  return A;
}

JordanSplitting jordan(const HalfIntegralMatrix& T, long p) { return jordan(to_rat(T), p); }

JordanSplitting jordan(const RatSquare& twoT, long p) {
  JordanSplitting J{p, {}};
  RatSquare A = twoT;
  while (!A.empty()) {
    const std::size_t n = A.size();
    long v = kInfiniteValuation;
    for (const auto& row : A)
      for (const auto& x : row) v = std::min(v, val(x, p));
    if (v == kInfiniteValuation) throw ConfigError("jordan: singular form");
    if (v < 0) throw ConfigError("jordan: form is not p-integral");

    std::size_t di = n;
    for (std::size_t i = 0; i < n && di == n; ++i)
      if (val(A[i][i], p) == v) di = i;
    if (di < n) {
      A = permute(A, front(n, {di}));
      Rat piv = A[0][0];
      RatSquare B(n - 1, std::vector<Rat>(n - 1));
      for (std::size_t a = 1; a < n; ++a)
        for (std::size_t b = 1; b < n; ++b) B[a - 1][b - 1] = A[a][b] - A[a][0] * A[0][b] / piv;
      Rat u = piv;
      if (v > 0) u /= Rat(ipow(p, v));
      J.blocks.push_back({v, {{u}}});
      A = std::move(B);
      continue;
    }
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (val(A[i][j], p) == v && bi == bj) bi = i, bj = j;
    if (p != 2) {
      // e_i <- e_i + e_j makes the diagonal entry a scale-p^v unit.
      for (std::size_t b = 0; b < n; ++b) A[bi][b] += A[bj][b];
      for (std::size_t a = 0; a < n; ++a) A[a][bi] += A[a][bj];
      continue;
    }
    A = permute(A, front(n, {bi, bj}));
    const Rat a = A[0][0], b = A[0][1], c = A[1][1];
    const Rat d = a * c - b * b;
    const Rat inv[2][2] = {{c / d, -b / d}, {-b / d, a / d}};
    RatSquare B(n - 2, std::vector<Rat>(n - 2));
    for (std::size_t x = 2; x < n; ++x)
      for (std::size_t y = 2; y < n; ++y) {
        Rat s = A[x][y];
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) s -= A[x][i] * inv[i][j] * A[j][y];
        B[x - 2][y - 2] = s;
      }
    Rat scale = v > 0 ? Rat(ipow(p, v)) : Rat(1);
    J.blocks.push_back({v, {{a / scale, b / scale}, {b / scale, c / scale}}});
    A = std::move(B);
  }
  std::stable_sort(J.blocks.begin(), J.blocks.end(),
                   [](const JordanBlock& x, const JordanBlock& y) { return x.exponent < y.exponent; });
  return J;
}

ModPData modp_data(const JordanSplitting& J) {
  const long p = J.p;
  long rank = 0, pairs = 0;
  Rat det = 1;
  int delta = 0;
  for (const auto& b : J.blocks) {
    if (b.exponent == 0) {
      if (p == 2 && b.unit.size() == 1) throw ConsistencyError("odd unimodular block in 2T at p=2");
      rank += static_cast<long>(b.unit.size());
      if (b.unit.size() == 2) {
        ++pairs;
        det *= b.unit[0][0] * b.unit[1][1] - b.unit[0][1] * b.unit[1][0];
      } else {
        det *= b.unit[0][0];
      }
    } else if (p == 2 && b.exponent == 1 && b.unit.size() == 1) {
      delta = 1;
    }
  }
  int eps = 0;
  if (p == 2) {
    long dv = residue_mod(det, 8);
    if (pairs % 2 == 1) dv = (8 - dv) % 8;
    eps = dv == 1 ? 1 : -1;
  } else if (rank % 2 == 0) {
    long a = rank / 2;
    long dv = residue_mod(det, p);
    if (a % 2 == 1) dv = (p - dv) % p;
    eps = a == 0 ? 1 : legendre(dv, p);
  }
  return {rank, eps, delta};
}

}  // namespace ikeda
