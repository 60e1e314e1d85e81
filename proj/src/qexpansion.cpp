#include "ikeda/qexpansion.hpp"

#include <algorithm>

#include "ikeda/error.hpp"

namespace ikeda {

QExpansion::QExpansion(std::size_t precision) : coeffs_(precision, Rat(0)) {
  if (precision == 0) throw Error("QExpansion precision must be positive");
}

QExpansion::QExpansion(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error("QExpansion precision must be positive");
}

const Rat& QExpansion::operator[](std::size_t i) const {
  if (i >= coeffs_.size())
    throw BoundError("q-expansion coefficient " + std::to_string(i) +
                     " beyond precision " + std::to_string(coeffs_.size()));
  return coeffs_[i];
}

QExpansion QExpansion::with_coeff(std::size_t i, const Rat& value) const {
  QExpansion r = *this;
  if (i >= r.coeffs_.size()) throw BoundError("with_coeff beyond precision");
  r.coeffs_[i] = value;
  return r;
}

QExpansion QExpansion::truncate(std::size_t precision) const {
  if (precision > coeffs_.size()) throw BoundError("truncate cannot extend precision");
  return QExpansion(std::vector<Rat>(coeffs_.begin(), coeffs_.begin() + precision));
}

QExpansion QExpansion::pow(unsigned e) const {
  QExpansion result(precision());
  result.coeffs_[0] = 1;
  QExpansion base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

QExpansion QExpansion::dilate(std::size_t k) const {
  if (k == 0) throw Error("dilate by zero");
  std::size_t n = precision() * k;
  QExpansion r(n);
  for (std::size_t i = 0; i < precision(); ++i) r.coeffs_[i * k] = coeffs_[i];
  return r;
}

QExpansion operator+(const QExpansion& a, const QExpansion& b) {
  std::size_t n = std::min(a.precision(), b.precision());
  QExpansion r(n);
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

QExpansion operator-(const QExpansion& a, const QExpansion& b) {
  std::size_t n = std::min(a.precision(), b.precision());
  QExpansion r(n);
  for (std::size_t i = 0; i < n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
  return r;
}

QExpansion operator*(const QExpansion& a, const QExpansion& b) {
  std::size_t n = std::min(a.precision(), b.precision());
  QExpansion r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

QExpansion operator*(const Rat& s, const QExpansion& a) {
  QExpansion r = a;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

}  // namespace ikeda
