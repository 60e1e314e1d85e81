#pragma once

#include <string>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

/// Dense univariate polynomial with rational coefficients, c[0] + c[1] X + ...
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(const Rat& c);
  /// c X^k
  static Poly monomial(const Rat& c, std::size_t k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat operator()(const Rat& x) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  struct DivMod;
  /// Euclidean division by a nonzero polynomial.
  DivMod divmod(const Poly& divisor) const;

  std::string to_string(const std::string& var = "X") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

struct Poly::DivMod {
  Poly quotient;
  Poly remainder;
};

}  // namespace ikeda
