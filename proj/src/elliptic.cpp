#include "ikeda/elliptic.hpp"

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"

namespace ikeda {

QExpansion eisenstein_qexp(unsigned k, std::size_t precision) {
  if (k < 4 || k % 2 != 0) throw ConfigError("eisenstein_qexp: weight must be even and >= 4");
  std::vector<Rat> c(precision, Rat(0));
  c[0] = 1;
  Rat factor = -Rat(2 * k) / bernoulli(k);
  for (std::size_t n = 1; n < precision; ++n)
    c[n] = factor * Rat(sigma(k - 1, static_cast<long>(n)));
  return QExpansion(std::move(c));
}

QExpansion delta_qexp(std::size_t precision) {
  if (precision < 2) throw ConfigError("delta_qexp needs precision >= 2");
  // prod (1 - q^n) via Euler's pentagonal theorem, then the 24th power.
  std::vector<Rat> e(precision, Rat(0));
  const long n = static_cast<long>(precision);
  e[0] = 1;
  for (long k = 1; k * (3 * k - 1) / 2 < n; ++k) {
    Rat sign = (k % 2 == 0) ? 1 : -1;
    e[k * (3 * k - 1) / 2] = sign;
    if (k * (3 * k + 1) / 2 < n) e[k * (3 * k + 1) / 2] = sign;
  }
  QExpansion eta(std::move(e));
  QExpansion p24 = eta.pow(24);
  std::vector<Rat> d(precision, Rat(0));
  for (std::size_t n = 1; n < precision; ++n) d[n] = p24[n - 1];
  return QExpansion(std::move(d));
}

const Int& EllipticEigenform::eigenvalue(long p) const {
  auto it = ap.find(p);
  if (it == ap.end())
    throw BoundError("a(" + std::to_string(p) + ") beyond eigenform precision " +
                     std::to_string(qexp.precision()));
  return it->second;
}

bool is_supported_elliptic_weight(unsigned weight) {
  switch (weight) {
    case 12: case 16: case 18: case 20: case 22: case 26:
      return true;
    default:
      return false;
  }
}

EllipticEigenform eigenform(unsigned weight, std::size_t precision) {
  if (!is_supported_elliptic_weight(weight))
    throw ConfigError("weight " + std::to_string(weight) +
                      " does not have a one-dimensional level-one cusp space");
  if (precision < 3) precision = 3;
  QExpansion f = delta_qexp(precision);
  auto e4 = [&] { return eisenstein_qexp(4, precision); };
  auto e6 = [&] { return eisenstein_qexp(6, precision); };
  switch (weight) {
    case 12: break;
    case 16: f = f * e4(); break;
    case 18: f = f * e6(); break;
    case 20: f = f * e4().pow(2); break;
    case 22: f = f * e4() * e6(); break;
    case 26: f = f * e4().pow(2) * e6(); break;
  }
  EllipticEigenform out{weight, f, {}};
  for (long p : primes_up_to(static_cast<long>(precision) - 1)) {
    const Rat& c = f[p];
    if (!is_integer(c)) throw ConsistencyError("non-integral eigenform coefficient");
    out.ap.emplace(p, c.get_num());
  }
  return out;
}

}  // namespace ikeda
