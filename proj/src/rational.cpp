#include "ikeda/rational.hpp"

#include "ikeda/error.hpp"

namespace ikeda {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ConfigError("not a rational number: " + s);
  r.canonicalize();
  return r;
}

Int ipow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Int ipow(long base, unsigned long exp) { return ipow(Int(base), exp); }

Rat rpow(const Rat& base, long exp) {
  if (exp >= 0) {
    return Rat(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
  }
  if (base == 0) throw Error("zero to a negative power");
  Rat inv = 1 / base;
  return Rat(ipow(inv.get_num(), -exp), ipow(inv.get_den(), -exp));
}

bool is_integer(const Rat& x) { return x.get_den() == 1; }

long valuation(const Int& n, long p) {
  if (n == 0) return kInfiniteValuation;
  Int pp(p);
  Int m = n;
  long v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

long valuation(const Rat& x, long p) {
  if (x == 0) return kInfiniteValuation;
  return valuation(x.get_num(), p) - valuation(x.get_den(), p);
}

long residue_mod(const Rat& x, long m) {
  Int mm(m);
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_den().get_mpz_t(), mm.get_mpz_t()) == 0) {
    if (m == 1) return 0;
    throw Error("denominator not invertible modulo " + std::to_string(m));
  }
  Int r = (x.get_num() * inv) % mm;
  if (r < 0) r += mm;
  return r.get_si();
}

}  // namespace ikeda
