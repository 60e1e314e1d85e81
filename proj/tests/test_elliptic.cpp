#include "doctest.h"

#include <numeric>

#include "ikeda/arith.hpp"
#include "ikeda/elliptic.hpp"
#include "ikeda/error.hpp"

using namespace ikeda;

TEST_CASE("Eisenstein series") {
  CHECK(eisenstein_qexp(4, 3) == QExpansion(std::vector<Rat>{1, 240, 2160}));
  CHECK(eisenstein_qexp(6, 2) == QExpansion(std::vector<Rat>{1, -504}));
  CHECK(eisenstein_qexp(4, 1) == QExpansion(std::vector<Rat>{1}));
}

TEST_CASE("Delta") {
  CHECK(delta_qexp(3) == QExpansion(std::vector<Rat>{0, 1, -24}));
  CHECK(delta_qexp(4) == QExpansion(std::vector<Rat>{0, 1, -24, 252}));
  // Eta product against (E4^3 - E6^2) / 1728.
  const std::size_t n = 100;
  QExpansion e4 = eisenstein_qexp(4, n), e6 = eisenstein_qexp(6, n);
  CHECK(delta_qexp(n) == make_rat(1, 1728) * (e4.pow(3) - e6.pow(2)));
}

TEST_CASE("eigenforms") {
  CHECK(eigenform(12).eigenvalue(2) == -24);
  CHECK(eigenform(18).eigenvalue(2) == -528);
  CHECK(eigenform(12).eigenvalue(11) == 534612);
  for (unsigned w : {12u, 16u, 18u, 20u, 22u, 26u}) CHECK(eigenform(w).qexp[1] == 1);
  CHECK_THROWS_AS(eigenform(14), ConfigError);
  CHECK_THROWS_AS(eigenform(24), ConfigError);
  CHECK_FALSE(is_supported_elliptic_weight(24));
}

TEST_CASE("Hecke multiplicativity") {
  const long n = 200;
  for (unsigned w : {12u, 16u, 18u, 20u, 22u, 26u}) {
    EllipticEigenform f = eigenform(w, n);
    const auto& a = f.qexp;
    for (long m = 2; m < n; ++m)
      for (long k = 2; m * k < n; ++k)
        if (std::gcd(m, k) == 1) CHECK(a[m * k] == a[m] * a[k]);
    for (long p : primes_up_to(14)) CHECK(a[p * p] == a[p] * a[p] - Rat(ipow(p, w - 1)));
    for (long p : primes_up_to(n - 1)) CHECK(Rat(f.eigenvalue(p)) == a[p]);
  }
}
