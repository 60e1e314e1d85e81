#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

// ---- elementary number theory on machine integers ----

/// Prime factorization of |n| (n != 0) as (prime, exponent) pairs, ascending.
std::vector<std::pair<long, int>> factorize(long n);
std::vector<long> divisors(long n);
std::vector<long> primes_up_to(long n);
bool is_prime(long n);
int mobius(long n);
/// sum_{d | n} d^k
Int sigma(unsigned k, long n);
long isqrt(long n);

// ---- special values ----

/// k-th Bernoulli number, B_1 = -1/2.
Rat bernoulli(unsigned k);
/// Bernoulli polynomial B_k(x).
Rat bernoulli_poly(unsigned k, const Rat& x);
/// zeta(1 - 2r) = -B_{2r} / (2r), r >= 1.
Rat zeta_neg(unsigned r);

/// Kronecker symbol (D / m).
int kronecker(long D, long m);

bool is_fundamental_discriminant(long d);

struct FundamentalPart {
  long d;  ///< fundamental discriminant (1 for squares)
  long f;  ///< positive conductor, Dt = d f^2
};
/// Splits a discriminant Dt (Dt = 0,1 mod 4, Dt != 0) as d f^2.
FundamentalPart fundamental_part(long Dt);

/// Generalized Bernoulli number B_{r, chi_d} for a fundamental discriminant d.
Rat generalized_bernoulli(unsigned r, long d);
/// L(1 - r, chi_d) = -B_{r,chi_d} / r.
Rat dirichlet_L_neg(unsigned r, long d);

/// Cohen's function H(r, N).
Rat cohen_H(unsigned r, long N);

}  // namespace ikeda
