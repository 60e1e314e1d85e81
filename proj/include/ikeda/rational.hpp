#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace ikeda {

using Int = mpz_class;
/// Exact rational, always stored in lowest terms with positive denominator.
using Rat = mpq_class;

Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den = 1);

std::string to_string(const Int& x);
/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& x);
Rat parse_rat(const std::string& s);

Int ipow(const Int& base, unsigned long exp);
Int ipow(long base, unsigned long exp);
/// base^exp for any integer exponent (base != 0 when exp < 0).
Rat rpow(const Rat& base, long exp);

bool is_integer(const Rat& x);

/// p-adic valuation; returns a large sentinel for zero.
long valuation(const Int& n, long p);
long valuation(const Rat& x, long p);
inline constexpr long kInfiniteValuation = 1L << 40;

/// Residue of a p-integral rational modulo m (m > 0, gcd(den, m) = 1).
long residue_mod(const Rat& x, long m);

}  // namespace ikeda
