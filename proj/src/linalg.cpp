#include "ikeda/linalg.hpp"

#include "ikeda/error.hpp"

namespace ikeda {

RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols) {
  RatMatrix a = rows;
  std::vector<long> pivotCol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    Rat inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = 0; j < ncols; ++j) a[i][j] -= f * a[r][j];
    }
    pivotCol.push_back(static_cast<long>(c));
    ++r;
  }
  std::vector<bool> isPivot(ncols, false);
  for (long c : pivotCol) isPivot[c] = true;
  RatMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (isPivot[free]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivotCol.size(); ++i) v[pivotCol[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Int determinant(const std::vector<std::vector<Int>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  auto a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = t;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace ikeda
