#include "ikeda/half_power.hpp"

#include "ikeda/error.hpp"

namespace ikeda {

HalfPowerScalar::HalfPowerScalar(long prime, const Rat& value, long halfExponent)
    : prime_(prime), value_(value), half_exponent_(halfExponent) {
  if (value_ == 0) {
    half_exponent_ = 0;
    return;
  }
  long v = valuation(value_, prime_);
  if (v != 0) {
    value_ *= rpow(Rat(prime_), -v);
    half_exponent_ += 2 * v;
  }
}

Rat HalfPowerScalar::to_rational() const {
  if (is_zero()) return 0;
  if (half_exponent_ % 2 != 0)
    throw ConsistencyError("residual half power " + to_string() + " is irrational");
  return value_ * rpow(Rat(prime_), half_exponent_ / 2);
}

HalfPowerScalar operator*(const HalfPowerScalar& a, const HalfPowerScalar& b) {
  if (a.prime_ != b.prime_) throw Error("HalfPowerScalar prime mismatch");
  return HalfPowerScalar(a.prime_, a.value_ * b.value_, a.half_exponent_ + b.half_exponent_);
}

HalfPowerScalar operator+(const HalfPowerScalar& a, const HalfPowerScalar& b) {
  if (a.prime_ != b.prime_) throw Error("HalfPowerScalar prime mismatch");
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long da = a.half_exponent_, db = b.half_exponent_;
  if ((da - db) % 2 != 0)
    throw ConsistencyError("adding half powers of different parity: " + a.to_string() +
                           " + " + b.to_string());
  long lo = std::min(da, db);
  Rat sum = a.value_ * rpow(Rat(a.prime_), (da - lo) / 2) +
            b.value_ * rpow(Rat(b.prime_), (db - lo) / 2);
  return HalfPowerScalar(a.prime_, sum, lo);
}

HalfPowerScalar operator-(const HalfPowerScalar& a) {
  return HalfPowerScalar(a.prime_, -a.value_, a.half_exponent_);
}

std::string HalfPowerScalar::to_string() const {
  return ikeda::to_string(value_) + "*" + std::to_string(prime_) + "^(" +
         std::to_string(half_exponent_) + "/2)";
}

SymmetricLaurentPoly::SymmetricLaurentPoly(long prime, HalfPowerScalar constant,
                                           std::vector<HalfPowerScalar> pairCoeffs)
    : prime_(prime), constant_(std::move(constant)), pair_(std::move(pairCoeffs)) {
  if (constant_.prime() != prime_) throw Error("SymmetricLaurentPoly prime mismatch");
  for (const auto& c : pair_)
    if (c.prime() != prime_) throw Error("SymmetricLaurentPoly prime mismatch");
  while (!pair_.empty() && pair_.back().is_zero()) pair_.pop_back();
}

SymmetricLaurentPoly SymmetricLaurentPoly::zero(long prime) {
  return SymmetricLaurentPoly(prime, HalfPowerScalar(prime, 0));
}

SymmetricLaurentPoly SymmetricLaurentPoly::one(long prime) {
  return SymmetricLaurentPoly(prime, HalfPowerScalar(prime, 1));
}

HalfPowerScalar SymmetricLaurentPoly::coeff(long j) const {
  if (j < 0) j = -j;
  if (j == 0) return constant_;
  if (static_cast<std::size_t>(j) > pair_.size()) return HalfPowerScalar(prime_, 0);
  return pair_[j - 1];
}

long SymmetricLaurentPoly::degree() const {
  if (!pair_.empty()) return static_cast<long>(pair_.size());
  return constant_.is_zero() ? -1 : 0;
}

bool operator==(const SymmetricLaurentPoly& a, const SymmetricLaurentPoly& b) {
  return a.prime_ == b.prime_ && a.constant_ == b.constant_ && a.pair_ == b.pair_;
}

std::vector<Int> chebyshev_table(const Int& ap, long p, long w, long maxJ) {
  std::vector<Int> P;
  P.push_back(2);
  if (maxJ >= 1) P.push_back(ap);
  Int pw = ipow(p, static_cast<unsigned long>(w));
  for (long j = 2; j <= maxJ; ++j) P.push_back(ap * P[j - 1] - pw * P[j - 2]);
  return P;
}

HalfPowerScalar sym_laurent_eval_chebyshev(const SymmetricLaurentPoly& P, const Int& ap,
                                           long w) {
  long p = P.prime();
  long deg = P.degree();
  HalfPowerScalar acc = P.constant();
  if (deg <= 0) return acc;
  auto table = chebyshev_table(ap, p, w, deg);
  for (long j = 1; j <= deg; ++j) {
    const HalfPowerScalar& u = P.pair_coeffs()[j - 1];
    if (u.is_zero()) continue;
    acc = acc + u * HalfPowerScalar(p, Rat(table[j]), -j * w);
  }
  return acc;
}

}  // namespace ikeda
