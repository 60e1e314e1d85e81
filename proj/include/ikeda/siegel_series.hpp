#pragma once

#include <vector>

#include "ikeda/half_power.hpp"
#include "ikeda/jordan.hpp"
#include "ikeda/local_density.hpp"
#include "ikeda/poly.hpp"
#include "ikeda/quadform.hpp"

namespace ikeda {

/// F_p(T, X) with integer coefficients b_0 .. b_deg.
struct SiegelPoly {
  long p;
  std::string gram;        ///< 2T as "a,b;b,c"
  std::size_t size;        ///< m = 2n
  std::vector<Int> coeffs;
  long degIntent;          ///< 2 f_p
  bool oracleChecked = false;
  int oracleDepth = 0;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  Poly as_poly() const;
};

/// alpha^pr_p(H_k, T) in X = p^-k from the reduction of T modulo p.
Poly primitive_density(const ModPData& data, std::size_t m, long p);

/// alpha_p(H_k, T) = sum over lattices M containing Z_p^m with T[G^-1]
/// half-integral of (p^{m+1} X^2)^{ord det G} alpha^pr(T[G^-1]).
Poly density_by_reduction(const HalfIntegralMatrix& T, long p);

/// (1 - X) prod_{j=1}^{n} (1 - p^{2j} X^2) / (1 - chi_d(p) p^n X), as numerator
/// and denominator.
struct GammaFactor {
  Poly numerator;
  Poly denominator;
};
GammaFactor gamma_factor(const HalfIntegralMatrix& T, long p);

struct SiegelOptions {
  bool oracle = false;   ///< compare against the density oracle (throws on mismatch)
  int maxDepth = 6;
  bool useCache = true;
};

/// Throws ConsistencyError unless b_0 = 1, the coefficients are integers and
/// the degree is 2 f_p.
SiegelPoly siegel_poly(const HalfIntegralMatrix& T, long p, const SiegelOptions& opt = {});

/// Interpolated F_p from the oracle alone: alpha / gamma.
SiegelPoly siegel_poly_from_oracle(const HalfIntegralMatrix& T, long p, int maxDepth = 6);

/// F~(X) = X^-f F(p^{-(2n+1)/2} X); throws ConsistencyError unless symmetric.
SymmetricLaurentPoly normalize(const SiegelPoly& F);

}  // namespace ikeda
