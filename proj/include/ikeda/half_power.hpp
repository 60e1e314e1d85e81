#pragma once

#include <string>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

/// value * p^(halfExponent / 2), with every factor of p moved into the exponent.
/// Zero is stored as value 0 with exponent 0.
class HalfPowerScalar {
 public:
  HalfPowerScalar(long prime, const Rat& value, long halfExponent = 0);

  long prime() const { return prime_; }
  const Rat& value() const { return value_; }
  long half_exponent() const { return half_exponent_; }
  bool is_zero() const { return value_ == 0; }
  /// Rational iff the half exponent is even (or the scalar is zero).
  bool is_rational() const { return is_zero() || half_exponent_ % 2 == 0; }
  /// Throws ConsistencyError when the scalar carries an odd power of sqrt(p).
  Rat to_rational() const;

  friend HalfPowerScalar operator*(const HalfPowerScalar& a, const HalfPowerScalar& b);
  /// Sum of scalars whose half exponents share parity; throws otherwise.
  friend HalfPowerScalar operator+(const HalfPowerScalar& a, const HalfPowerScalar& b);
  friend HalfPowerScalar operator-(const HalfPowerScalar& a);
  friend bool operator==(const HalfPowerScalar& a, const HalfPowerScalar& b) = default;

  std::string to_string() const;

 private:
  long prime_;
  Rat value_;
  long half_exponent_;
};

/// u_0 + sum_{j >= 1} u_j (X^j + X^-j) over a fixed prime p.
class SymmetricLaurentPoly {
 public:
  SymmetricLaurentPoly(long prime, HalfPowerScalar constant,
                       std::vector<HalfPowerScalar> pairCoeffs = {});
  static SymmetricLaurentPoly zero(long prime);
  static SymmetricLaurentPoly one(long prime);

  long prime() const { return prime_; }
  const HalfPowerScalar& constant() const { return constant_; }
  const std::vector<HalfPowerScalar>& pair_coeffs() const { return pair_; }
  /// Coefficient of X^j (equal to that of X^-j).
  HalfPowerScalar coeff(long j) const;
  /// Largest j with a nonzero coefficient; -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return degree() < 0; }

  friend bool operator==(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b);

 private:
  long prime_;
  HalfPowerScalar constant_;
  std::vector<HalfPowerScalar> pair_;
};

/// P_j(a) with P_0 = 2, P_1 = a, P_{j+1} = a P_j - p^w P_{j-1}, so that
/// X^j + X^-j = P_j(a) p^(-j w / 2) whenever a = p^(w/2) (X + X^-1).
std::vector<Int> chebyshev_table(const Int& ap, long p, long w, long maxJ);

/// Exact value of P at the Satake point attached to the Hecke eigenvalue ap
/// of weight w + 1.
HalfPowerScalar sym_laurent_eval_chebyshev(const SymmetricLaurentPoly& P, const Int& ap,
                                           long w);

}  // namespace ikeda
