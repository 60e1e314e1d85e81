#include "ikeda/quadform.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/linalg.hpp"

namespace ikeda {

namespace {

std::vector<std::vector<Int>> to_int(const IntMatrix& m) {
  std::vector<std::vector<Int>> r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (long x : m[i]) r[i].push_back(Int(x));
  return r;
}

}  // namespace

Int determinant(const IntMatrix& U) { return determinant(to_int(U)); }

HalfIntegralMatrix::HalfIntegralMatrix(IntMatrix twoT) : twoT_(std::move(twoT)) {
  const std::size_t m = twoT_.size();
  if (m == 0) throw ConfigError("empty Gram matrix");
  for (const auto& row : twoT_)
    if (row.size() != m) throw ConfigError("Gram matrix is not square");
  for (std::size_t i = 0; i < m; ++i) {
    if (twoT_[i][i] % 2 != 0) throw ConfigError("2T must have even diagonal: " + to_string());
    for (std::size_t j = 0; j < i; ++j)
      if (twoT_[i][j] != twoT_[j][i]) throw ConfigError("2T is not symmetric: " + to_string());
  }
  for (std::size_t k = 1; k <= m; ++k) {
    IntMatrix minor(k, std::vector<long>(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = twoT_[i][j];
    if (determinant(minor) <= 0) throw ConfigError("2T is not positive definite: " + to_string());
  }
}

Int HalfIntegralMatrix::det_two_t() const { return determinant(twoT_); }

long HalfIntegralMatrix::trace_two_t() const {
  long t = 0;
  for (std::size_t i = 0; i < size(); ++i) t += twoT_[i][i];
  return t;
}

HalfIntegralMatrix HalfIntegralMatrix::transform(const IntMatrix& U) const {
  const std::size_t m = size();
  if (U.size() != m) throw ConfigError("transform: size mismatch");
  IntMatrix tu(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) tu[i][j] += twoT_[i][k] * U[k][j];
  IntMatrix r(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) r[i][j] += U[k][i] * tu[k][j];
  return HalfIntegralMatrix(std::move(r));
}

std::string HalfIntegralMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < twoT_.size(); ++i) {
    if (i) os << ';';
    for (std::size_t j = 0; j < twoT_[i].size(); ++j) {
      if (j) os << ',';
      os << twoT_[i][j];
    }
  }
  return os.str();
}

HalfIntegralMatrix parse_gram(const std::string& text) {
  IntMatrix rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<long> r;
    std::stringstream es(row);
    std::string cell;
    while (std::getline(es, cell, ',')) {
      try {
        std::size_t used = 0;
        long v = std::stol(cell, &used);
        if (cell.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(cell);
        r.push_back(v);
      } catch (const std::exception&) {
        throw ConfigError("bad Gram entry '" + cell + "' in \"" + text + "\"");
      }
    }
    rows.push_back(std::move(r));
  }
  return HalfIntegralMatrix(std::move(rows));
}

FormInvariants invariants(const HalfIntegralMatrix& T) {
  FormInvariants inv;
  inv.detTwoT = T.det_two_t();
  if (!inv.detTwoT.fits_slong_p()) throw BoundError("det(2T) exceeds machine range");
  const long n = static_cast<long>(T.size() / 2);
  const long sign = (T.size() % 2 == 0 && n % 2 == 1) ? -1 : 1;
  inv.D = sign * inv.detTwoT.get_si();
  auto [d, f] = fundamental_part(inv.D);
  inv.d = d;
  inv.fTotal = f;
  if (f > 1)
    for (auto [p, e] : factorize(f)) inv.fAtP[p] = e;
  inv.DB = abs(inv.detTwoT);
  return inv;
}

bool det_lex_less(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) {
  Int da = a.det_two_t(), db = b.det_two_t();
  if (da != db) return da < db;
  return a < b;
}

std::vector<HalfIntegralMatrix> reduced_binary_of_det(long det) {
  // t11 x^2 + 2 t12 xy + t22 y^2 = a x^2 + b xy + c y^2 with 0 <= b <= a <= c.
  std::vector<HalfIntegralMatrix> out;
  for (long a = 1; 3 * a * a <= det; ++a)
    for (long b = 0; b <= a; ++b) {
      long num = det + b * b;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a) continue;
      out.emplace_back(IntMatrix{{2 * a, b}, {b, 2 * c}});
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HalfIntegralMatrix> enumerate_binary(long detBound) {
  std::vector<HalfIntegralMatrix> out;
  for (long det = 1; det <= detBound; ++det)
    for (auto& t : reduced_binary_of_det(det)) out.push_back(std::move(t));
  return out;
}

namespace {

void fill_off_diagonal(IntMatrix& g, std::size_t idx,
                       const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                       std::vector<HalfIntegralMatrix>& out) {
  if (idx == slots.size()) {
    try {
      out.emplace_back(g);
    } catch (const ConfigError&) {
    }
    return;
  }
  auto [i, j] = slots[idx];
  long bound = isqrt(g[i][i] * g[j][j] - 1);
  for (long b = -bound; b <= bound; ++b) {
    g[i][j] = g[j][i] = b;
    fill_off_diagonal(g, idx + 1, slots, out);
  }
  g[i][j] = g[j][i] = 0;
}

void fill_diagonal(IntMatrix& g, std::size_t i, long remaining, long prev,
                   const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                   std::vector<HalfIntegralMatrix>& out) {
  const std::size_t m = g.size();
  if (i == m) {
    fill_off_diagonal(g, 0, slots, out);
    return;
  }
  for (long a = prev; a * static_cast<long>(m - i) <= remaining; a += 2) {
    g[i][i] = a;
    fill_diagonal(g, i + 1, remaining - a, a, slots, out);
  }
}

}  // namespace

std::vector<HalfIntegralMatrix> enumerate_by_trace(std::size_t m, long traceBound) {
  if (m == 0 || m > 4) throw ConfigError("enumerate_by_trace: size must be 1..4");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) slots.emplace_back(i, j);
  IntMatrix g(m, std::vector<long>(m, 0));
  std::vector<HalfIntegralMatrix> out;
  fill_diagonal(g, 0, traceBound, 2, slots, out);
  std::sort(out.begin(), out.end(), det_lex_less);
  return out;
}

IntMatrix random_unimodular(std::size_t m, long entryBound, std::uint64_t seed, int steps) {
  if (entryBound < 1) throw ConfigError("random_unimodular: entryBound must be >= 1");
  std::mt19937_64 rng(seed);
  IntMatrix U(m, std::vector<long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) U[i][i] = 1;
  if (m < 2) return U;
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::uniform_int_distribution<long> coef(-entryBound, entryBound);
  std::uniform_int_distribution<int> kind(0, 3);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) j = (i + 1) % m;
    switch (kind(rng)) {
      case 0:  // swap columns
        for (auto& row : U) std::swap(row[i], row[j]);
        break;
      case 1:  // negate a column
        for (auto& row : U) row[i] = -row[i];
        break;
      default: {  // column shear
        long c = coef(rng);
        for (auto& row : U) row[j] += c * row[i];
      }
    }
  }
  return U;
}

}  // namespace ikeda
