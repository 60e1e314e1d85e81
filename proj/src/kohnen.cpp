#include "ikeda/kohnen.hpp"

#include <cstdlib>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/linalg.hpp"

namespace ikeda {

namespace {

using IntSeries = std::vector<Int>;

IntSeries mul(const IntSeries& a, const IntSeries& b) {
  std::size_t n = std::min(a.size(), b.size());
  IntSeries r(n, Int(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return r;
}

IntSeries power(IntSeries base, unsigned e, std::size_t n) {
  IntSeries r(n, Int(0));
  r[0] = 1;
  while (e > 0) {
    if (e & 1U) r = mul(r, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return r;
}

IntSeries to_int_series(const QExpansion& q) {
  IntSeries r;
  for (const auto& c : q.coeffs()) {
    if (!is_integer(c)) throw ConsistencyError("expected integral q-expansion");
    r.push_back(c.get_num());
  }
  return r;
}

/// Monomials E4^a E6^b spanning M_w.
std::vector<IntSeries> level_one_basis(int w, std::size_t n) {
  std::vector<IntSeries> out;
  if (w < 0 || w % 2 != 0) return out;
  IntSeries e4 = to_int_series(eisenstein_qexp(4, n));
  IntSeries e6 = to_int_series(eisenstein_qexp(6, n));
  for (int b = 0; 6 * b <= w; ++b) {
    int rest = w - 6 * b;
    if (rest % 4 != 0) continue;
    out.push_back(mul(power(e4, rest / 4, n), power(e6, b, n)));
  }
  return out;
}

std::vector<Rat> normalize_first_nonzero(std::vector<Rat> c) {
  for (const auto& x : c) {
    if (x == 0) continue;
    Rat inv = 1 / x;
    for (auto& y : c) y *= inv;
    return c;
  }
  throw ConsistencyError("plus-space form vanishes identically on its table");
}

}  // namespace

Rat JacobiForm::C(long D) const {
  if (D < 0) return 0;
  if (D > bound()) throw BoundError("Jacobi coefficient D=" + std::to_string(D) + " beyond table");
  return coeff[D];
}

JacobiForm jacobi_eisenstein(unsigned k, long bound) {
  if (k != 4 && k != 6) throw ConfigError("jacobi_eisenstein: weight must be 4 or 6");
  JacobiForm e{k, std::vector<Rat>(bound + 1, Rat(0))};
  Rat h0 = cohen_H(k - 1, 0);
  for (long D = 0; D <= bound; ++D) e.coeff[D] = cohen_H(k - 1, D) / h0;
  return e;
}

int dim_modular_forms(int k) {
  if (k < 0 || k % 2 != 0) return 0;
  if (k % 12 == 2) return k / 12;
  return k / 12 + 1;
}

int dim_cusp_forms(int k) {
  if (k < 12) return 0;
  return dim_modular_forms(k) - 1;
}

std::vector<JacobiForm> jacobi_cusp_space(unsigned k, long bound) {
  if (k % 2 == 1) return {};
  std::size_t n = static_cast<std::size_t>(bound / 4 + 1);
  std::vector<JacobiForm> gens;
  for (unsigned ek : {4U, 6U}) {
    if (static_cast<int>(k) - static_cast<int>(ek) < 0) continue;
    JacobiForm e = jacobi_eisenstein(ek, bound);
    for (const auto& g : level_one_basis(static_cast<int>(k) - static_cast<int>(ek), n)) {
      JacobiForm phi{k, std::vector<Rat>(bound + 1, Rat(0))};
      for (long D = 0; D <= bound; ++D) {
        Rat s = 0;
        for (long m = 0; 4 * m <= D; ++m)
          if (g[m] != 0) s += Rat(g[m]) * e.coeff[D - 4 * m];
        phi.coeff[D] = s;
      }
      gens.push_back(std::move(phi));
    }
  }
  RatMatrix constantRow{std::vector<Rat>()};
  for (const auto& g : gens) constantRow[0].push_back(g.coeff[0]);
  RatMatrix ker = nullspace(constantRow, gens.size());
  int expected = dim_cusp_forms(2 * static_cast<int>(k) - 2);
  if (static_cast<int>(ker.size()) != expected)
    throw ConsistencyError("jacobi_cusp_space(" + std::to_string(k) + "): dimension " +
                           std::to_string(ker.size()) + ", expected " +
                           std::to_string(expected));
  std::vector<JacobiForm> out;
  for (const auto& v : ker) {
    JacobiForm phi{k, std::vector<Rat>(bound + 1, Rat(0))};
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (v[i] != 0)
        for (long D = 0; D <= bound; ++D) phi.coeff[D] += v[i] * gens[i].coeff[D];
    out.push_back(std::move(phi));
  }
  return out;
}

PlusSpaceForm::PlusSpaceForm(unsigned kappa, int sign, std::vector<Rat> c,
                             std::string normalization)
    : kappa_(kappa), sign_(sign), c_(std::move(c)), normalization_(std::move(normalization)) {}

bool PlusSpaceForm::in_support(long t) const {
  long r = ((sign_ * t) % 4 + 4) % 4;
  return t > 0 && (r == 0 || r == 1);
}

const Rat& PlusSpaceForm::coeff(long t) const {
  if (t < 0 || t > bound())
    throw BoundError("plus-space coefficient c(" + std::to_string(t) + ") beyond table bound " +
                     std::to_string(bound()));
  return c_[t];
}

PlusSpaceForm PlusSpaceForm::scaled(const Rat& lambda) const {
  std::vector<Rat> c = c_;
  for (auto& x : c) x *= lambda;
  return PlusSpaceForm(kappa_, sign_, std::move(c), "scaled(" + to_string(lambda) + ")");
}

bool is_supported_kappa(unsigned kappa) { return is_supported_elliptic_weight(2 * kappa); }

PlusSpaceForm plus_space_from_theta_basis(unsigned kappa, long bound) {
  if (!is_supported_kappa(kappa)) throw ConfigError("unsupported kappa " + std::to_string(kappa));
  const std::size_t n = static_cast<std::size_t>(bound + 1);
  const int sign = kappa % 2 == 0 ? 1 : -1;
  IntSeries theta(n, Int(0));
  for (long m = 0; m * m < static_cast<long>(n); ++m) theta[m * m] = m == 0 ? 1 : 2;
  IntSeries F(n, Int(0));
  for (long m = 1; m < static_cast<long>(n); m += 2) F[m] = sigma(1, m);

  const unsigned top = 2 * kappa + 1;
  const unsigned jmax = top / 4;
  IntSeries theta4 = power(theta, 4, n);
  std::vector<IntSeries> thetaPow{power(theta, top - 4 * jmax, n)};
  for (unsigned i = 1; i <= jmax; ++i) thetaPow.push_back(mul(thetaPow.back(), theta4));
  std::vector<IntSeries> basis;
  IntSeries Fj(n, Int(0));
  Fj[0] = 1;
  for (unsigned j = 0; j <= jmax; ++j) {
    basis.push_back(mul(thetaPow[jmax - j], Fj));
    Fj = mul(Fj, F);
  }

  // Plus condition and vanishing constant term.
  RatMatrix rows;
  std::vector<Rat> c0;
  for (const auto& b : basis) c0.push_back(Rat(b[0]));
  rows.push_back(c0);
  for (std::size_t N = 1; N < n; ++N) {
    long r = ((sign * static_cast<long>(N)) % 4 + 4) % 4;
    if (r == 0 || r == 1) continue;
    std::vector<Rat> row;
    for (const auto& b : basis) row.push_back(Rat(b[N]));
    rows.push_back(std::move(row));
  }
  RatMatrix ker = nullspace(rows, basis.size());
  if (ker.size() != 1)
    throw ConsistencyError("plus-space cusp forms of weight kappa+1/2 for kappa=" +
                           std::to_string(kappa) + " have dimension " +
                           std::to_string(ker.size()) + " on this table (need 1; raise bound)");
  std::vector<Rat> c(n, Rat(0));
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (ker[0][i] != 0)
      for (std::size_t N = 0; N < n; ++N) c[N] += ker[0][i] * Rat(basis[i][N]);
  return PlusSpaceForm(kappa, sign, normalize_first_nonzero(std::move(c)), "first-nonzero=1");
}

PlusSpaceForm plus_space_from_jacobi(unsigned kappa, long bound) {
  if (!is_supported_kappa(kappa)) throw ConfigError("unsupported kappa " + std::to_string(kappa));
  if (kappa % 2 == 0)
    throw ConfigError("index-one Jacobi forms of odd weight vanish; use the theta basis");
  auto space = jacobi_cusp_space(kappa + 1, bound);
  if (space.size() != 1) throw ConsistencyError("Jacobi cusp space is not a line");
  return PlusSpaceForm(kappa, -1, normalize_first_nonzero(space[0].coeff), "first-nonzero=1");
}

PlusSpaceForm plus_space_eigenform(unsigned kappa, unsigned n, long bound) {
  if (!is_supported_kappa(kappa)) throw ConfigError("unsupported kappa " + std::to_string(kappa));
  if ((kappa + n) % 2 != 0)
    throw ConfigError("kappa + n must be even (kappa=" + std::to_string(kappa) +
                      ", n=" + std::to_string(n) + ")");
  if (bound < 1) throw ConfigError("plus-space table bound must be positive");
  if (kappa % 2 == 1) return plus_space_from_jacobi(kappa, bound);
  return plus_space_from_theta_basis(kappa, bound);
}

SymmetricLaurentPoly psi_from_exponent(long p, long f, int chi) {
  if (f < 0) return SymmetricLaurentPoly::zero(p);
  // (X^{f+1}-X^{-f-1})/(X-X^{-1}) has X^j for j = f, f-2, ..., -f;
  // -chi p^{-1/2} (X^f-X^{-f})/(X-X^{-1}) has X^j for j = f-1, ..., -(f-1).
  HalfPowerScalar one(p, 1);
  HalfPowerScalar second(p, Rat(-chi), -1);
  std::vector<HalfPowerScalar> pairs;
  for (long j = 1; j <= f; ++j) pairs.push_back((f - j) % 2 == 0 ? one : second);
  HalfPowerScalar constant = (f % 2 == 0) ? one : second;
  return SymmetricLaurentPoly(p, constant, std::move(pairs));
}

PsiPoly psi_poly(long t, long p, int sign) {
  long ts = sign * t;
  long r = ((ts % 4) + 4) % 4;
  if (r != 0 && r != 1)
    throw ConfigError("psi_poly: " + std::to_string(ts) + " is not 0,1 mod 4");
  auto [d, f] = fundamental_part(ts);
  long fp = valuation(Int(f), p);
  return PsiPoly{p, ts, fp, psi_from_exponent(p, fp, kronecker(d, p))};
}

Rat psi_local_factor(const PsiPoly& psi, const Int& ap, unsigned kappa) {
  long w = 2 * static_cast<long>(kappa) - 1;
  HalfPowerScalar v = sym_laurent_eval_chebyshev(psi.poly, ap, w);
  return (HalfPowerScalar(psi.p, 1, w * psi.fExp) * v).to_rational();
}

Report shimura_consistency(const PlusSpaceForm& h, const EllipticEigenform& f, long bound) {
  Report report{"shimura", 0, {}};
  if (f.weight != 2 * h.kappa()) throw ConfigError("eigenform weight does not match h");
  bound = std::min(bound, h.bound());
  for (long t = 1; t <= bound; ++t) {
    if (!h.in_support(t)) {
      if (h.coeff(t) != 0)
        report.failures.push_back({"t=" + std::to_string(t), "0", to_string(h.coeff(t)),
                                   "coefficient outside the plus-space support"});
      continue;
    }
    ++report.cases;
    auto [d, ft] = fundamental_part(h.sign() * t);
    long td = std::labs(d);
    Rat expected = h.coeff(td);
    try {
      for (auto [p, e] : factorize(ft)) {
        (void)e;
        PsiPoly psi = psi_poly(t, p, h.sign());
        expected *= psi_local_factor(psi, f.eigenvalue(p), h.kappa());
      }
    } catch (const ConsistencyError& err) {
      report.failures.push_back({"t=" + std::to_string(t), "", "", err.what()});
      continue;
    }
    if (expected != h.coeff(t))
      report.failures.push_back({"t=" + std::to_string(t), to_string(expected),
                                 to_string(h.coeff(t)), "square-class factorization"});
  }
  return report;
}

}  // namespace ikeda
