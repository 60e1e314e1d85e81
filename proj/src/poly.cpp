#include "ikeda/poly.hpp"

#include <algorithm>

#include "ikeda/error.hpp"

namespace ikeda {

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t k) {
  std::vector<Rat> v(k + 1, Rat(0));
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rat> v(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + Rat(-1) * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> v(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(v));
}

Poly operator*(const Rat& s, const Poly& a) {
  std::vector<Rat> v = a.c_;
  for (auto& x : v) x *= s;
  return Poly(std::move(v));
}

Poly::DivMod Poly::divmod(const Poly& divisor) const {
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rat> rem = c_;
  long dd = divisor.degree();
  if (degree() < dd) return {Poly(), *this};
  std::vector<Rat> quo(degree() - dd + 1, Rat(0));
  const Rat& lead = divisor.c_.back();
  for (long i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Rat q = rem[i] / lead;
    quo[i - dd] = q;
    for (long j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.c_[j];
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + ikeda::to_string(c_[i]) + ")";
    if (i > 0) s += "*" + var + "^" + std::to_string(i);
  }
  return s;
}

}  // namespace ikeda
