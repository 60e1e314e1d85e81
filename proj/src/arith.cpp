#include "ikeda/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

#include "ikeda/error.hpp"

namespace ikeda {

std::vector<std::pair<long, int>> factorize(long n) {
  if (n == 0) throw Error("factorize(0)");
  n = std::labs(n);
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<long> divisors(long n) {
  std::vector<long> ds{1};
  for (auto [p, e] : factorize(n)) {
    std::size_t cur = ds.size();
    long pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2) return out;
  std::vector<bool> sieve(n + 1, true);
  for (long i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

int mobius(long n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

Int sigma(unsigned k, long n) {
  Int s = 0;
  for (long d : divisors(n)) s += ipow(d, k);
  return s;
}

long isqrt(long n) {
  if (n < 0) throw Error("isqrt of negative");
  long r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rat> g_bernoulli{Rat(1)};

Int binomial(unsigned n, unsigned k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

Rat bernoulli(unsigned k) {
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j <= m} C(m+1, j) B_j = 0
  while (g_bernoulli.size() <= k) {
    unsigned m = static_cast<unsigned>(g_bernoulli.size());
    Rat s = 0;
    for (unsigned j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * g_bernoulli[j];
    g_bernoulli.push_back(-s / Rat(m + 1));
  }
  return g_bernoulli[k];
}

Rat bernoulli_poly(unsigned k, const Rat& x) {
  // B_k(x) = sum_j C(k, j) B_j x^{k-j}
  Rat s = 0;
  for (unsigned j = 0; j <= k; ++j) {
    s += Rat(binomial(k, j)) * bernoulli(j) * rpow(x, static_cast<long>(k - j));
  }
  return s;
}

Rat zeta_neg(unsigned r) {
  if (r == 0) throw Error("zeta_neg requires r >= 1");
  return -bernoulli(2 * r) / Rat(2 * r);
}

int kronecker(long D, long m) {
  // Cohen, Algorithm 1.4.10 adapted to signed arguments.
  auto tab2 = [](long a) {
    long r = ((a % 8) + 8) % 8;
    return (r == 1 || r == 7) ? 1 : ((r == 3 || r == 5) ? -1 : 0);
  };
  long a = D, b = m;
  if (b == 0) return (a == 1 || a == -1) ? 1 : 0;
  if (a % 2 == 0 && b % 2 == 0) return 0;
  int k = 1;
  long v = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++v;
  }
  if (v % 2 == 1) k = tab2(a);
  if (b < 0) {
    b = -b;
    if (a < 0) k = -k;
  }
  // now b odd positive; Jacobi symbol (a / b) with sign bookkeeping
  a %= b;
  if (a < 0) a += b;
  while (a != 0) {
    long w = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++w;
    }
    if (w % 2 == 1) k *= tab2(b);
    if ((a & b & 2) != 0) k = -k;
    long r = std::labs(a);
    a = b % r;
    b = r;
  }
  return b == 1 ? k : 0;
}

bool is_fundamental_discriminant(long d) {
  if (d == 1) return true;
  if (d == 0) return false;
  auto squarefree = [](long n) {
    for (auto [p, e] : factorize(n)) {
      (void)p;
      if (e > 1) return false;
    }
    return true;
  };
  long r = ((d % 4) + 4) % 4;
  if (r == 1) return squarefree(d);
  if (r != 0) return false;
  long m = d / 4;
  long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && squarefree(m);
}

FundamentalPart fundamental_part(long Dt) {
  long r = ((Dt % 4) + 4) % 4;
  if (Dt == 0 || (r != 0 && r != 1))
    throw ConfigError("fundamental_part: " + std::to_string(Dt) + " is not 0,1 mod 4");
  long s = Dt < 0 ? -1 : 1;
  long g = 1;
  for (auto [p, e] : factorize(Dt)) {
    for (int i = 0; i < e / 2; ++i) g *= p;
    if (e % 2 == 1) s *= p;
  }
  long rs = ((s % 4) + 4) % 4;
  if (rs == 1) return {s, g};
  // s = 2,3 mod 4: Dt = 0 mod 4 forces 2 | g
  if (g % 2 != 0) throw ConsistencyError("fundamental_part: parity failure");
  return {4 * s, g / 2};
}

Rat generalized_bernoulli(unsigned r, long d) {
  long f = std::labs(d);
  Rat s = 0;
  for (long a = 1; a <= f; ++a) {
    int chi = kronecker(d, a);
    if (chi == 0) continue;
    Rat b = bernoulli_poly(r, make_rat(a, f));
    if (chi > 0)
      s += b;
    else
      s -= b;
  }
  return s * Rat(ipow(f, r - 1));
}

Rat dirichlet_L_neg(unsigned r, long d) {
  if (r == 0) throw Error("dirichlet_L_neg requires r >= 1");
  return -generalized_bernoulli(r, d) / Rat(r);
}

Rat cohen_H(unsigned r, long N) {
  if (r == 0) throw Error("cohen_H requires r >= 1");
  if (N == 0) return zeta_neg(r);
  if (N < 0) return 0;
  long D = (r % 2 == 0) ? N : -N;
  long m = ((D % 4) + 4) % 4;
  if (m != 0 && m != 1) return 0;
  auto [d, f] = fundamental_part(D);
  Rat sum = 0;
  for (long e : divisors(f)) {
    int mu = mobius(e);
    if (mu == 0) continue;
    int chi = kronecker(d, e);
    if (chi == 0) continue;
    sum += Rat(mu * chi) * Rat(ipow(e, r - 1)) * Rat(sigma(2 * r - 1, f / e));
  }
  return dirichlet_L_neg(r, d) * sum;
}

}  // namespace ikeda
