#include "doctest.h"

#include <map>
#include <numeric>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/half_power.hpp"
#include "ikeda/poly.hpp"
#include "ikeda/qexpansion.hpp"

using namespace ikeda;

namespace {

// Primitive reduced forms ax^2 + bxy + cy^2 of discriminant d < 0.
long class_number(long d) {
  long h = 0;
  for (long a = 1; 3 * a * a <= -d; ++a)
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b - d;
      if (num % (4 * a)) continue;
      long c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      ++h;
    }
  return h;
}

QExpansion theta_series(std::size_t n) {
  std::vector<Rat> c(n, Rat(0));
  for (long m = 0; m * m < static_cast<long>(n); ++m) c[m * m] = m == 0 ? 1 : 2;
  return QExpansion(c);
}

QExpansion odd_sigma_series(std::size_t n) {
  std::vector<Rat> c(n, Rat(0));
  for (long m = 1; m < static_cast<long>(n); m += 2) c[m] = Rat(sigma(1, m));
  return QExpansion(c);
}

}  // namespace

TEST_CASE("Bernoulli numbers") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == make_rat(-1, 2));
  CHECK(bernoulli(2) == make_rat(1, 6));
  CHECK(bernoulli(4) == make_rat(-1, 30));
  CHECK(bernoulli(12) == make_rat(-691, 2730));
  for (unsigned k = 3; k < 30; k += 2) CHECK(bernoulli(k) == 0);
  // Defining recurrence sum_{j<=k} C(k+1, j) B_j = 0.
  for (unsigned k = 1; k < 24; ++k) {
    Rat s = 0;
    for (unsigned j = 0; j <= k; ++j) {
      Int c;
      mpz_bin_uiui(c.get_mpz_t(), k + 1, j);
      s += Rat(c) * bernoulli(j);
    }
    CHECK(s == 0);
  }
}

TEST_CASE("zeta at negative odd integers") {
  CHECK(zeta_neg(1) == make_rat(-1, 12));
  CHECK(zeta_neg(2) == make_rat(1, 120));
  CHECK(zeta_neg(3) == make_rat(-1, 252));
}

TEST_CASE("Kronecker symbol") {
  CHECK(kronecker(-4, 3) == -1);
  CHECK(kronecker(1, 7) == 1);
  CHECK(kronecker(-3, 3) == 0);
  CHECK(kronecker(5, 2) == -1);
  CHECK(kronecker(-7, 2) == 1);
  CHECK(kronecker(8, 2) == 0);
  // Euler's criterion at odd primes.
  for (long p : {3L, 5L, 7L, 11L, 13L})
    for (long D : {-23L, -20L, -4L, -3L, 5L, 8L, 12L, 13L}) {
      long r = ((D % p) + p) % p;
      Int e;
      mpz_powm_ui(e.get_mpz_t(), Int(r).get_mpz_t(), (p - 1) / 2, Int(p).get_mpz_t());
      int expected = r == 0 ? 0 : (e == 1 ? 1 : -1);
      CHECK(kronecker(D, p) == expected);
    }
}

TEST_CASE("fundamental part") {
  auto fp = fundamental_part(-16);
  CHECK(fp.d == -4);
  CHECK(fp.f == 2);
  fp = fundamental_part(-3);
  CHECK(fp.d == -3);
  CHECK(fp.f == 1);
  fp = fundamental_part(9);
  CHECK(fp.d == 1);
  CHECK(fp.f == 3);
  CHECK_THROWS_AS(fundamental_part(-2), ConfigError);
  for (long D = -400; D <= 400; ++D) {
    if (D == 0 || ((D % 4) + 4) % 4 > 1) continue;
    auto [d, f] = fundamental_part(D);
    CHECK(d * f * f == D);
    CHECK(is_fundamental_discriminant(d));
  }
}

TEST_CASE("L-values at non-positive integers") {
  CHECK(dirichlet_L_neg(2, 1) == make_rat(-1, 12));
  CHECK(dirichlet_L_neg(1, -4) == make_rat(1, 2));
  CHECK(dirichlet_L_neg(4, 1) == make_rat(1, 120));
  // Class number formula L(0, chi_d) = 2 h(d) / w(d).
  for (long d = -3; d >= -300; --d) {
    if (!is_fundamental_discriminant(d)) continue;
    long w = d == -3 ? 6 : d == -4 ? 4 : 2;
    CHECK_MESSAGE(dirichlet_L_neg(1, d) == make_rat(2 * class_number(d), w), "d=" << d);
  }
  // Odd r with even character vanishes.
  CHECK(dirichlet_L_neg(3, 5) == 0);
}

TEST_CASE("Cohen H values") {
  CHECK(cohen_H(2, 0) == make_rat(1, 120));
  CHECK(cohen_H(2, 3) == 0);
  CHECK(cohen_H(2, 4) == make_rat(-7, 12));
}

TEST_CASE("Cohen H against the Cohen-Eisenstein series") {
  // M^+_{r+1/2}(Gamma_0(4)) is a line for r = 2, 3; its member with constant
  // term zeta(1-2r) = H(r, 0) has coefficients H(r, N).
  const std::size_t n = 60;
  QExpansion th = theta_series(n), F = odd_sigma_series(n);
  for (unsigned r : {2u, 3u}) {
    const int sign = r % 2 == 0 ? 1 : -1;
    std::vector<QExpansion> basis;
    for (unsigned j = 0; 4 * j <= 2 * r + 1; ++j) basis.push_back(th.pow(2 * r + 1 - 4 * j) * F.pow(j));
    REQUIRE(basis.size() == 2);
    // Kill the first unsupported coefficient: N = 2 for r even, N = 1 for r odd.
    const std::size_t bad = r % 2 == 0 ? 2 : 1;
    Rat lambda = -basis[0][bad] / basis[1][bad];
    QExpansion g = basis[0] + lambda * basis[1];
    g = cohen_H(r, 0) * g;
    for (long N = 0; N < static_cast<long>(n); ++N) {
      long cls = ((sign * N) % 4 + 4) % 4;
      if (cls > 1) {
        CHECK(g[N] == 0);
        continue;
      }
      CHECK_MESSAGE(g[N] == cohen_H(r, N), "r=" << r << " N=" << N);
    }
  }
}

TEST_CASE("half-power scalars") {
  HalfPowerScalar a(2, Rat(-24), -23);
  CHECK(a.value() == -3);
  CHECK(a.half_exponent() == -17);
  CHECK_FALSE(a.is_rational());
  CHECK_THROWS_AS(a.to_rational(), ConsistencyError);
  HalfPowerScalar b = a * a;
  CHECK(b.is_rational());
  CHECK(b.to_rational() == make_rat(9, 1) * rpow(Rat(2), -17));
  CHECK_THROWS_AS(HalfPowerScalar(3, 1, 1) + HalfPowerScalar(3, 1, 0), ConsistencyError);
  CHECK((HalfPowerScalar(3, 1, 1) + HalfPowerScalar(3, 2, 3)) == HalfPowerScalar(3, 7, 1));
  CHECK(HalfPowerScalar(5, 0, 7) == HalfPowerScalar(5, 0, 0));
}

TEST_CASE("Chebyshev evaluation at Satake points") {
  auto one = SymmetricLaurentPoly::one(2);
  CHECK(sym_laurent_eval_chebyshev(one, Int(-24), 23) == HalfPowerScalar(2, 1, 0));

  SymmetricLaurentPoly x1(2, HalfPowerScalar(2, 0), {HalfPowerScalar(2, 1)});
  CHECK(sym_laurent_eval_chebyshev(x1, Int(-24), 23) == HalfPowerScalar(2, -24, -23));

  for (long p : {2L, 3L, 5L}) {
    const long w = 17;
    const Int ap(-528 + 7 * p);
    SymmetricLaurentPoly x2(p, HalfPowerScalar(p, 0), {HalfPowerScalar(p, 0), HalfPowerScalar(p, 1)});
    Rat expected = (Rat(ap * ap) - 2 * Rat(ipow(p, w))) * rpow(Rat(p), -w);
    CHECK(sym_laurent_eval_chebyshev(x2, ap, w).to_rational() == expected);
  }
}

TEST_CASE("Chebyshev table matches symbolic expansion") {
  // X^j + X^-j written in powers of s = X + X^-1 by peeling off binomial expansions,
  // then P_j(a) = sum c_i a^i p^{w (j - i) / 2}.
  const long p = 3, w = 11;
  const Int ap = 2 * 3 * 3 * 3 * 3 - 7;
  auto table = chebyshev_table(ap, p, w, 8);
  for (long j = 0; j <= 8; ++j) {
    std::map<long, Int> target;  // Laurent coefficients
    target[j] += 1;
    target[-j] += 1;
    std::vector<Int> c(j + 1);
    for (long i = j; i >= 0; --i) {
      Int lead = target[i];
      if (lead == 0) continue;
      c[i] = lead;
      for (long t = 0; t <= i; ++t) {
        Int b;
        mpz_bin_uiui(b.get_mpz_t(), i, t);
        target[i - 2 * t] -= lead * b;
      }
    }
    for (const auto& [e, v] : target) REQUIRE(v == 0);
    Int value = 0;
    for (long i = 0; i <= j; ++i)
      if (c[i] != 0) {
        REQUIRE((j - i) % 2 == 0);
        value += c[i] * ipow(ap, i) * ipow(p, w * (j - i) / 2);
      }
    CHECK_MESSAGE(table[j] == value, "j=" << j);
  }
}

TEST_CASE("q-expansions") {
  QExpansion a(std::vector<Rat>{1, 2, 3});
  QExpansion b(std::vector<Rat>{0, 1, 0, 5});
  QExpansion ab = a * b;
  CHECK(ab.precision() == 3);
  CHECK(ab[1] == 1);
  CHECK(ab[2] == 2);
  CHECK(a.dilate(2).precision() == 6);
  CHECK(a.dilate(2)[2] == 2);
  CHECK(a.dilate(2)[3] == 0);
  CHECK(a.pow(0) == QExpansion(std::vector<Rat>{1, 0, 0}));
  CHECK(a.pow(2) == a * a);
  CHECK_THROWS(a[3]);
}

TEST_CASE("polynomial division") {
  Poly f(std::vector<Rat>{-1, 0, 0, 1});
  Poly g(std::vector<Rat>{-1, 1});
  auto [q, r] = f.divmod(g);
  CHECK(r.is_zero());
  CHECK(q == Poly(std::vector<Rat>{1, 1, 1}));
  CHECK(q * g == f);
  CHECK(f(Rat(2)) == 7);
}
