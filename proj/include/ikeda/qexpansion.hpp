#pragma once

#include <cstddef>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

/// Truncated power series sum_{i < N} a_i q^i with exact rational coefficients.
/// Every binary operation truncates to the smaller precision of its operands.
class QExpansion {
 public:
  explicit QExpansion(std::size_t precision);
  explicit QExpansion(std::vector<Rat> coeffs);

  std::size_t precision() const { return coeffs_.size(); }
  const Rat& operator[](std::size_t i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Copy with coefficient i replaced; QExpansion values are otherwise immutable.
  QExpansion with_coeff(std::size_t i, const Rat& value) const;
  QExpansion truncate(std::size_t precision) const;
  QExpansion pow(unsigned e) const;
  /// f(q) -> f(q^k), precision scaled so no coefficient is invented.
  QExpansion dilate(std::size_t k) const;

  friend QExpansion operator+(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator-(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const QExpansion& a, const QExpansion& b);
  friend QExpansion operator*(const Rat& s, const QExpansion& a);
  friend bool operator==(const QExpansion& a, const QExpansion& b) = default;

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace ikeda
