#pragma once

#include "ikeda/poly.hpp"
#include "ikeda/quadform.hpp"

namespace ikeda {

/// Enumeration guard for the oracle: at most 2^36 candidates.
inline constexpr double kOracleCandidateGuard = 68719476736.0;

/// alpha_p(H_k, T) as a polynomial in X = p^-k, read off at depth e from
///   sum_{Y in Sym_m(Z/p^e)} psi(-tr(TY) / p^e) X^{w(Y)},
/// w(Y) = sum_i (e - min(lambda_i, e)) over the Smith exponents of Y.
Poly density_polynomial_at_depth(const HalfIntegralMatrix& T, long p, int e);

struct DensityPoly {
  long p;
  Poly alpha;
  int depth;  ///< alpha at depth and depth - 1 agree
};

/// First depth tried: one past the largest Jordan exponent of 2T. Shallower
/// depths can agree with each other and still be wrong (2T = diag(2, 8), p = 2:
/// depths 2 and 3 agree, depth 4 differs).
int starting_depth(const HalfIntegralMatrix& T, long p);

/// Increases e from starting_depth until two consecutive depths agree. Throws BoundError when the
/// next depth exceeds the guard and ConsistencyError when maxDepth is reached.
DensityPoly density_polynomial(const HalfIntegralMatrix& T, long p, int maxDepth = 6);

/// Stabilized alpha_p(H_k, T).
Rat local_density(const HalfIntegralMatrix& T, long p, long k, int maxDepth = 6);

/// p^{e(m(m+1)/2 - 2km)} #{X in M_{2k,m}(Z/p^e) : H_k[X] = T mod p^e}, counted by
/// lifting solutions one p-adic digit at a time. Tiny cases only.
Rat literal_density(const HalfIntegralMatrix& T, long p, long k, int e);

}  // namespace ikeda
