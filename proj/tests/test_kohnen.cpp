#include "doctest.h"

#include "ikeda/arith.hpp"
#include "ikeda/elliptic.hpp"
#include "ikeda/error.hpp"
#include "ikeda/kohnen.hpp"

using namespace ikeda;

TEST_CASE("Jacobi Eisenstein series") {
  JacobiForm e4 = jacobi_eisenstein(4, 40);
  CHECK(e4.C(0) == 1);
  CHECK(e4.C(3) == cohen_H(3, 3) / zeta_neg(3));
  JacobiForm e6 = jacobi_eisenstein(6, 40);
  CHECK(e6.C(2) == 0);
  CHECK(e6.C(0) == 1);
  CHECK(e4.C(-1) == 0);
}

TEST_CASE("Jacobi cusp space dimensions") {
  // Index-one Jacobi forms of odd weight vanish.
  for (unsigned k : {7u, 9u, 11u}) CHECK(jacobi_cusp_space(k, 40).empty());
  CHECK(jacobi_cusp_space(8, 40).empty());
  CHECK(jacobi_cusp_space(10, 40).size() == 1);
  for (unsigned k : {12u, 14u}) CHECK(jacobi_cusp_space(k, 60).size() == 1);
  for (const auto& phi : jacobi_cusp_space(12, 60)) CHECK(phi.is_cusp());
}

TEST_CASE("plus-space eigenforms") {
  PlusSpaceForm h9 = plus_space_eigenform(9, 1, 60);
  CHECK(h9.sign() == -1);
  CHECK(h9.coeff(3) == 1);
  CHECK(h9.coeff(4) == -2);
  for (long t = 1; t <= 60; ++t) {
    CHECK(h9.in_support(t) == (t % 4 == 0 || t % 4 == 3));
    if (!h9.in_support(t)) CHECK(h9.coeff(t) == 0);
  }
  // c(3 * 2^2) = c(3) (a(2) - chi_{-3}(2) 2^{kappa-1}).
  CHECK(h9.coeff(12) == Rat(eigenform(18).eigenvalue(2)) + 256);

  // Kohnen-Zagier weight 13/2 form.
  PlusSpaceForm h6 = plus_space_eigenform(6, 2, 20);
  CHECK(h6.sign() == 1);
  CHECK(h6.coeff(1) == 1);
  CHECK(h6.coeff(4) == -56);
  CHECK(h6.coeff(5) == 120);
  CHECK(h6.coeff(8) == -240);
  CHECK(h6.coeff(9) == 9);
  CHECK(h6.coeff(12) == 1440);
  CHECK_THROWS_AS(h6.coeff(21), BoundError);

  CHECK_THROWS_AS(plus_space_eigenform(9, 2, 40), ConfigError);
  CHECK_THROWS_AS(plus_space_eigenform(7, 1, 40), ConfigError);
}

TEST_CASE("theta basis and Jacobi route agree for odd kappa") {
  for (unsigned k : {9u, 11u, 13u}) {
    PlusSpaceForm a = plus_space_from_jacobi(k, 80);
    PlusSpaceForm b = plus_space_from_theta_basis(k, 80);
    for (long t = 0; t <= 80; ++t) CHECK_MESSAGE(a.coeff(t) == b.coeff(t), "kappa=" << k << " t=" << t);
  }
}

TEST_CASE("Psi polynomials") {
  CHECK(psi_from_exponent(3, 0, 1) == SymmetricLaurentPoly::one(3));
  CHECK(psi_from_exponent(3, -1, 1).is_zero());
  for (int chi : {-1, 0, 1}) {
    SymmetricLaurentPoly expected(5, HalfPowerScalar(5, -chi, -1), {HalfPowerScalar(5, 1)});
    CHECK(psi_from_exponent(5, 1, chi) == expected);
  }
  for (int sign : {-1, 1})
    for (long t = 1; t <= 300; ++t) {
      if (((sign * t) % 4 + 4) % 4 > 1) {
        CHECK_THROWS_AS(psi_poly(t, 2, sign), ConfigError);
        continue;
      }
      for (long p : {2L, 3L, 5L}) {
        PsiPoly psi = psi_poly(t, p, sign);
        CHECK(psi.poly.degree() == psi.fExp);
        const auto& c0 = psi.poly.constant();
        if (!c0.is_zero()) CHECK(((c0.half_exponent() % 2) != 0) == (psi.fExp % 2 != 0));
      }
    }
}

TEST_CASE("Shimura consistency") {
  for (unsigned k : {6u, 8u, 9u, 10u, 11u, 13u}) {
    const unsigned n = k % 2 ? 1 : 2;
    PlusSpaceForm h = plus_space_eigenform(k, n, 200);
    Report r = shimura_consistency(h, eigenform(2 * k), 200);
    CHECK_MESSAGE(r.ok(), "kappa=" << k << " failures=" << r.failures.size());
    CHECK(r.cases > 90);
  }
}
