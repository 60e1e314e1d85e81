#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

using IntMatrix = std::vector<std::vector<long>>;

/// Positive-definite half-integral T, stored as the even-diagonal integer matrix 2T.
class HalfIntegralMatrix {
 public:
  /// Validates symmetry, even diagonal and positive definiteness; throws ConfigError.
  explicit HalfIntegralMatrix(IntMatrix twoT);

  std::size_t size() const { return twoT_.size(); }
  long two_t(std::size_t i, std::size_t j) const { return twoT_[i][j]; }
  const IntMatrix& two_t() const { return twoT_; }
  Int det_two_t() const;
  long trace_two_t() const;
  /// T[U] = U^t T U.
  HalfIntegralMatrix transform(const IntMatrix& U) const;
  /// "a,b;b,c"
  std::string to_string() const;

  friend bool operator==(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) = default;
  friend auto operator<=>(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b) {
    return a.twoT_ <=> b.twoT_;
  }

 private:
  IntMatrix twoT_;
};

/// Parses rows of 2T separated by ';', entries by ','.
HalfIntegralMatrix parse_gram(const std::string& text);

struct FormInvariants {
  Int detTwoT;
  long D;       ///< (-1)^n det(2T)
  long d;       ///< fundamental discriminant
  long fTotal;  ///< D = d fTotal^2
  std::map<long, long> fAtP;
  Int DB;       ///< |det(2T)|
};

FormInvariants invariants(const HalfIntegralMatrix& T);

/// Forms ordered by det(2T), then lexicographically on 2T.
bool det_lex_less(const HalfIntegralMatrix& a, const HalfIntegralMatrix& b);

/// One representative per GL_2(Z)-class: t11 x^2 + 2t12 xy + t22 y^2 with
/// 0 <= 2t12 <= t11 <= t22. Sorted lexicographically on 2T.
std::vector<HalfIntegralMatrix> reduced_binary_of_det(long det);
/// Reduced binary forms with det(2T) <= detBound, by det then 2T.
std::vector<HalfIntegralMatrix> enumerate_binary(long detBound);
/// Size-m forms (m <= 4) with trace(2T) <= traceBound and 2t_ii <= 2t_jj for i < j.
std::vector<HalfIntegralMatrix> enumerate_by_trace(std::size_t m, long traceBound);

/// Product of `steps` random column swaps, sign changes and shears; shear coefficients lie in
/// [-entryBound, entryBound].
IntMatrix random_unimodular(std::size_t m, long entryBound, std::uint64_t seed, int steps = 6);
Int determinant(const IntMatrix& U);

}  // namespace ikeda
