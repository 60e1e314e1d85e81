#include "doctest.h"

#include <numeric>

#include "ikeda/error.hpp"
#include "ikeda/lift.hpp"
#include "ikeda/theta.hpp"

using namespace ikeda;

TEST_CASE("job gates") {
  CHECK_THROWS_AS(make_job(9, 2, 50, 50), ConfigError);
  CHECK_THROWS_AS(make_job(7, 1, 50, 50), ConfigError);
  CHECK_THROWS_AS(make_job(12, 2, 50, 50), ConfigError);
  CHECK_THROWS_AS(make_job(9, 0, 50, 50), ConfigError);
  CHECK_NOTHROW(make_job(6, 2, 50, 50));
  LiftJob job = make_job(9, 1, 20, 20);
  CHECK_THROWS_AS(lift_coefficient(job, parse_gram("2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2")), ConfigError);
}

TEST_CASE("degree-two coefficients") {
  LiftJob job = make_job(9, 1, 200, 200);
  auto c = lift_coefficient(job, parse_gram("2,1;1,2"));
  CHECK(c.value == 1);
  CHECK(c.D == -3);
  CHECK(c.cArg == 3);
  auto table = fourier_table(job, enumerate_binary(4));
  REQUIRE(table.size() == 2);
  CHECK(table[0].det2T == 3);
  CHECK(table[0].value == job.h.coeff(3));
  CHECK(table[1].det2T == 4);
  CHECK(table[1].value == job.h.coeff(4));
  CHECK(fourier_table(job, {}).empty());
  // gcd(a, r, b) = 1 gives the single term c(4ab - r^2).
  for (const auto& T : enumerate_binary(200)) {
    const long a = T.two_t(0, 0) / 2, r = T.two_t(0, 1), b = T.two_t(1, 1) / 2;
    if (std::gcd(std::gcd(a, r), b) == 1) CHECK(lift_coefficient(job, T).value == job.h.coeff(4 * a * b - r * r));
  }
}

TEST_CASE("Maass relation") {
  for (unsigned k : {9u, 11u, 13u}) {
    LiftJob job = make_job(k, 1, 200, 200);
    Report r = maass_check(job, k == 9 ? 200 : 100);
    CHECK_MESSAGE(r.ok(), "kappa=" << k);
    CHECK(r.cases > 100);
  }
  CHECK(maass_check(make_job(9, 1, 10, 10), 2).cases == 0);
}

TEST_CASE("parallel tables are identical") {
  LiftJob job = make_job(6, 2, 400, 400);
  auto forms = enumerate_by_trace(4, 10);
  auto a = fourier_table(job, forms, 1);
  auto b = fourier_table(job, forms, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].T == b[i].T);
    CHECK(a[i].value == b[i].value);
  }
}

TEST_CASE("GL invariance") {
  LiftJob job2 = make_job(10, 2, 400, 400);
  CHECK(invariance_check(job2, enumerate_by_trace(4, 10), 5, 17).ok());
  LiftJob job1 = make_job(13, 1, 200, 200);
  CHECK(invariance_check(job1, enumerate_binary(60), 10, 3).ok());
}

TEST_CASE("degree-four lift of Delta is proportional to the Schottky form") {
  LiftJob job = make_job(6, 2, 100, 100);
  Rat a1 = lift_coefficient(job, parse_gram("2,1,0,0;1,2,1,1;0,1,2,0;0,1,0,2")).value;
  Rat a2 = lift_coefficient(job, parse_gram("2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2")).value;
  CHECK(a1 != 0);
  CHECK(a1 / 5160960 == a2 / 206438400);
}

TEST_CASE("standard L-factor") {
  LiftJob job = make_job(9, 1, 20, 20);
  Poly L = standard_l_factor(job, 2);
  CHECK(L.degree() == 5);
  CHECK(L.coeff(0) == 1);
  auto [q, r] = L.divmod(Poly(std::vector<Rat>{1, -1}));
  CHECK(r.is_zero());
  CHECK(L.coeff(1) == make_rat(67, 32));
}
