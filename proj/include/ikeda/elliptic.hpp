#pragma once

#include <map>

#include "ikeda/qexpansion.hpp"

namespace ikeda {

inline constexpr std::size_t kDefaultEllipticPrecision = 64;

/// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n.
QExpansion eisenstein_qexp(unsigned k, std::size_t precision);
/// q prod (1 - q^n)^24.
QExpansion delta_qexp(std::size_t precision);

/// The normalized cusp eigenform of level one in a weight whose cusp space is a line.
struct EllipticEigenform {
  unsigned weight;  ///< 2 kappa
  QExpansion qexp;
  std::map<long, Int> ap;  ///< Hecke eigenvalues a(p) for primes p < precision

  const Int& eigenvalue(long p) const;
};

/// Weights with a one-dimensional level-one cusp space.
bool is_supported_elliptic_weight(unsigned weight);

/// Supported weights: 12, 16, 18, 20, 22, 26.
EllipticEigenform eigenform(unsigned weight, std::size_t precision = kDefaultEllipticPrecision);

}  // namespace ikeda
