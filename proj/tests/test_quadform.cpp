#include "doctest.h"

#include <set>

#include "ikeda/error.hpp"
#include "ikeda/jordan.hpp"
#include "ikeda/quadform.hpp"

using namespace ikeda;

TEST_CASE("parsing and validation") {
  auto T = parse_gram("2,1;1,2");
  CHECK(T.size() == 2);
  CHECK(T.det_two_t() == 3);
  CHECK(T.to_string() == "2,1;1,2");
  CHECK(parse_gram(" 2, 0 ; 0 ,8 ").to_string() == "2,0;0,8");
  CHECK_THROWS_AS(parse_gram("1,0;0,2"), ConfigError);   // odd diagonal
  CHECK_THROWS_AS(parse_gram("2,1;0,2"), ConfigError);   // not symmetric
  CHECK_THROWS_AS(parse_gram("2,3;3,2"), ConfigError);   // indefinite
  CHECK_THROWS_AS(parse_gram("2,1,0;1,2"), ConfigError);  // ragged
  CHECK_THROWS_AS(parse_gram("2,x;x,2"), ConfigError);
  CHECK_THROWS_AS(parse_gram(""), ConfigError);
}

TEST_CASE("invariants") {
  auto inv = invariants(parse_gram("2,1;1,2"));
  CHECK(inv.detTwoT == 3);
  CHECK(inv.D == -3);
  CHECK(inv.d == -3);
  CHECK(inv.fTotal == 1);
  inv = invariants(parse_gram("2,0;0,2"));
  CHECK(inv.D == -4);
  CHECK(inv.d == -4);
  CHECK(inv.fTotal == 1);
  inv = invariants(parse_gram("2,0;0,8"));
  CHECK(inv.D == -16);
  CHECK(inv.d == -4);
  CHECK(inv.fTotal == 2);
  CHECK(inv.fAtP.at(2) == 1);
  // Size 4: D = det(2T).
  inv = invariants(parse_gram("2,1,0,0;1,2,1,1;0,1,2,0;0,1,0,2"));
  CHECK(inv.D == 4);
  CHECK(inv.d == 1);
  CHECK(inv.fTotal == 2);
}

TEST_CASE("Jordan splittings") {
  auto J = jordan(parse_gram("2,0;0,6"), 3);
  REQUIRE(J.blocks.size() == 2);
  CHECK(J.blocks[0].exponent == 0);
  CHECK(J.blocks[1].exponent == 1);
  CHECK(J.blocks[0].unit[0][0] == 2);
  CHECK(J.blocks[1].unit[0][0] == 2);
  J = jordan(parse_gram("2,1;1,2"), 2);
  REQUIRE(J.blocks.size() == 1);
  CHECK(J.blocks[0].exponent == 0);
  CHECK(J.blocks[0].unit.size() == 2);
  J = jordan(parse_gram("2,0;0,2"), 5);
  CHECK(J.det_valuation() == 0);
  CHECK(J.rank() == 2);
  // The valuation of det(2T) is read off the splitting.
  for (const auto& T : enumerate_by_trace(3, 12))
    for (long p : {2L, 3L, 5L}) CHECK(jordan(T, p).det_valuation() == valuation(T.det_two_t(), p));
}

TEST_CASE("reduced binary forms") {
  auto r3 = reduced_binary_of_det(3);
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].to_string() == "2,1;1,2");
  auto r4 = reduced_binary_of_det(4);
  REQUIRE(r4.size() == 1);
  CHECK(r4[0].to_string() == "2,0;0,2");
  CHECK(enumerate_binary(2).empty());
  // Brute force over a x^2 + b xy + c y^2 with 0 <= b <= a <= c.
  long total = 0;
  for (long det = 1; det <= 300; ++det) {
    std::set<std::string> expected;
    for (long a = 1; 3 * a * a <= det; ++a)
      for (long b = 0; b <= a; ++b) {
        if ((det + b * b) % (4 * a)) continue;
        long c = (det + b * b) / (4 * a);
        if (c < a) continue;
        expected.insert(std::to_string(2 * a) + "," + std::to_string(b) + ";" + std::to_string(b) +
                        "," + std::to_string(2 * c));
      }
    std::set<std::string> got;
    for (const auto& T : reduced_binary_of_det(det)) got.insert(T.to_string());
    CHECK_MESSAGE(got == expected, "det=" << det);
    total += static_cast<long>(expected.size());
  }
  CHECK(static_cast<long>(enumerate_binary(300).size()) == total);
  auto forms = enumerate_binary(60);
  for (std::size_t i = 1; i < forms.size(); ++i) CHECK(det_lex_less(forms[i - 1], forms[i]));
}

TEST_CASE("trace enumeration") {
  auto forms = enumerate_by_trace(4, 8);
  CHECK(!forms.empty());
  std::set<std::string> seen;
  for (const auto& T : forms) {
    CHECK(T.trace_two_t() == 8);
    CHECK(T.det_two_t() > 0);
    for (std::size_t i = 1; i < 4; ++i) CHECK(T.two_t(i - 1, i - 1) <= T.two_t(i, i));
    seen.insert(T.to_string());
  }
  CHECK(seen.size() == forms.size());
  CHECK(seen.count("2,0,0,0;0,2,0,0;0,0,2,0;0,0,0,2"));
  CHECK(seen.count("2,1,0,0;1,2,1,1;0,1,2,0;0,1,0,2"));
  CHECK(forms.front().det_two_t() == 4);
  CHECK(enumerate_by_trace(2, 3).empty());
  CHECK_THROWS_AS(enumerate_by_trace(5, 10), ConfigError);
}

TEST_CASE("random unimodular matrices") {
  CHECK(random_unimodular(3, 2, 7, 0) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(abs(determinant(random_unimodular(4, 2, 11, 1))) == 1);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    IntMatrix U = random_unimodular(4, 2, seed);
    CHECK(abs(determinant(U)) == 1);
    auto T = parse_gram("2,1,0,0;1,2,1,1;0,1,2,0;0,1,0,2").transform(U);
    CHECK(T.det_two_t() == 4);
  }
  CHECK(random_unimodular(4, 2, 5) == random_unimodular(4, 2, 5));
}
