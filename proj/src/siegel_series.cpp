#include "ikeda/siegel_series.hpp"

#include <functional>
#include <map>
#include <mutex>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"

namespace ikeda {

namespace {

Rat qpow(long q, long e) { return rpow(Rat(q), e); }

/// Polynomial in Y with rational coefficients, built from linear factors.
Poly lin(const Rat& c1, const Rat& c0) { return Poly({c0, c1}); }
Poly quad(const Rat& c2, const Rat& c0) { return Poly({c0, Rat(0), c2}); }

/// #{isometric embeddings of T mod p into H_k mod p} as a polynomial in Y = p^k.
Poly injections(const ModPData& md, long m, long q) {
  const long r = md.rank;
  const Rat eps = md.eps;
  Poly f = Poly::constant(1);
  if (r % 2 == 0) {
    const long a = r / 2;
    if (a > 0) {
      f = Poly::monomial(qpow(q, -(a * a + a)), 2 * a) * lin(1, -1) * lin(qpow(q, -a), eps);
      for (long i = 1; i < a; ++i) f *= quad(qpow(q, -2 * i), -1);
    }
    const long s = m - r - md.delta;
    const Rat yw = qpow(q, -a);  // Y_W = Y / q^a
    if (md.delta == 0) {
      for (long i = 0; i < s; ++i) {
        Rat yi = yw * qpow(q, -i);
        f *= Rat(ipow(q, i)) * lin(yi, -eps) * lin(yi / q, eps);
      }
    } else {
      f *= Poly({Rat(0), -eps * yw / q, yw * yw / q});
      for (long i = 0; i < s; ++i) f *= quad(yw * yw * qpow(q, -(2 + i)), -Rat(ipow(q, i)));
    }
  } else {
    const long a = (r - 1) / 2;
    f = Poly::monomial(qpow(q, -(a + 1) * (a + 1)), 2 * a + 1) * lin(1, -1);
    for (long i = 1; i <= a; ++i) f *= quad(qpow(q, -2 * i), -1);
    for (long i = 0; i < m - r; ++i)
      f *= Rat(ipow(q, i)) * quad(qpow(q, -(2 * a + 2 + 2 * i)), -1);
  }
  return f;
}

bool p_integral(const Rat& x, long p) { return x.get_den() % p != 0 || x.get_den() == 1; }

/// Visits every upper-triangular Hermite G with diagonal p^{a_i}, sum a_i <= maxJ,
/// and T[G^-1] half-integral at p.
void for_each_superlattice(const RatSquare& A, long p, long maxJ,
                           const std::function<void(long, const RatSquare&)>& visit) {
  const std::size_t m = A.size();
  std::vector<long> a(m, 0);
  std::function<void(std::size_t, long)> diag = [&](std::size_t i, long used) {
    if (i == m) {
      // Off-diagonal G_ij in [0, p^{a_j}) for i < j.
      std::vector<std::pair<std::size_t, std::size_t>> offs;
      std::vector<long> range;
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = r + 1; c < m; ++c)
          if (a[c] > 0) {
            offs.emplace_back(r, c);
            range.push_back(ipow(p, a[c]).get_si());
          }
      std::vector<long> vals(offs.size(), 0);
      while (true) {
        // G^-1 by back substitution on the upper-triangular G.
        RatSquare G(m, std::vector<Rat>(m, Rat(0)));
        for (std::size_t r = 0; r < m; ++r) G[r][r] = Rat(ipow(p, a[r]));
        for (std::size_t t = 0; t < offs.size(); ++t) G[offs[t].first][offs[t].second] = vals[t];
        RatSquare Gi(m, std::vector<Rat>(m, Rat(0)));
        for (std::size_t c = 0; c < m; ++c)
          for (std::size_t r = m; r-- > 0;) {
            Rat s = r == c ? Rat(1) : Rat(0);
            for (std::size_t k = r + 1; k < m; ++k) s -= G[r][k] * Gi[k][c];
            Gi[r][c] = s / G[r][r];
          }
        RatSquare AG(m, std::vector<Rat>(m, Rat(0)));
        for (std::size_t r = 0; r < m; ++r)
          for (std::size_t c = 0; c < m; ++c)
            for (std::size_t k = 0; k < m; ++k) AG[r][c] += A[r][k] * Gi[k][c];
        RatSquare B(m, std::vector<Rat>(m, Rat(0)));
        bool ok = true;
        for (std::size_t r = 0; r < m && ok; ++r)
          for (std::size_t c = r; c < m && ok; ++c) {
            Rat s = 0;
            for (std::size_t k = 0; k < m; ++k) s += Gi[k][r] * AG[k][c];
            B[r][c] = B[c][r] = s;
            ok = p_integral(s, p) && (r != c || p_integral(s / 2, p));
          }
        if (ok) visit(used, B);
        std::size_t t = 0;
        for (; t < vals.size(); ++t) {
          if (++vals[t] < range[t]) break;
          vals[t] = 0;
        }
        if (t == vals.size()) break;
      }
      return;
    }
    for (long e = 0; used + e <= maxJ; ++e) {
      a[i] = e;
      diag(i + 1, used + e);
    }
    a[i] = 0;
  };
  diag(0, 0);
}

std::mutex cacheMutex;
std::map<std::pair<long, HalfIntegralMatrix>, SiegelPoly> cache;

SiegelPoly finish(const HalfIntegralMatrix& T, long p, const Poly& alpha) {
  GammaFactor g = gamma_factor(T, p);
  auto [q, rem] = (alpha * g.denominator).divmod(g.numerator);
  if (!rem.is_zero())
    throw ConsistencyError("local density not divisible by gamma for 2T=" + T.to_string() +
                           " p=" + std::to_string(p));
  FormInvariants inv = invariants(T);
  long fp = inv.fAtP.count(p) ? inv.fAtP.at(p) : 0;
  SiegelPoly F{p, T.to_string(), T.size(), {}, 2 * fp};
  for (const auto& c : q.coeffs()) {
    if (!is_integer(c))
      throw ConsistencyError("non-integral Siegel coefficient " + to_string(c) + " for 2T=" +
                             T.to_string() + " p=" + std::to_string(p));
    F.coeffs.push_back(c.get_num());
  }
  if (F.coeffs.empty() || F.coeffs[0] != 1)
    throw ConsistencyError("Siegel series constant term is not 1 for 2T=" + T.to_string());
  if (F.degree() != F.degIntent)
    throw ConsistencyError("Siegel series degree " + std::to_string(F.degree()) + " != 2 f_p = " +
                           std::to_string(F.degIntent) + " for 2T=" + T.to_string() +
                           " p=" + std::to_string(p));
  return F;
}

}  // namespace

Poly SiegelPoly::as_poly() const {
  std::vector<Rat> c;
  for (const auto& x : coeffs) c.emplace_back(x);
  return Poly(std::move(c));
}

Poly primitive_density(const ModPData& data, std::size_t m, long p) {
  const long mm = static_cast<long>(m);
  Poly inj = injections(data, mm, p);
  if (inj.degree() > 2 * mm) throw ConsistencyError("injection count has degree above 2m");
  std::vector<Rat> c(2 * mm + 1, Rat(0));
  const Rat scale = Rat(ipow(p, mm * (mm + 1) / 2));
  for (long i = 0; i <= inj.degree(); ++i) c[2 * mm - i] = scale * inj.coeff(i);
  return Poly(std::move(c));
}

Poly density_by_reduction(const HalfIntegralMatrix& T, long p) {
  const long m = static_cast<long>(T.size());
  const long maxJ = valuation(T.det_two_t(), p) / 2;
  const Poly step = Poly::monomial(Rat(ipow(p, m + 1)), 2);
  std::vector<Poly> stepPow{Poly::constant(1)};
  for (long j = 1; j <= maxJ; ++j) stepPow.push_back(stepPow.back() * step);
  Poly total;
  for_each_superlattice(to_rat(T), p, maxJ, [&](long j, const RatSquare& B) {
    total += stepPow[j] * primitive_density(modp_data(jordan(B, p)), T.size(), p);
  });
  return total;
}

GammaFactor gamma_factor(const HalfIntegralMatrix& T, long p) {
  const long n = static_cast<long>(T.size() / 2);
  Poly num = lin(-1, 1);
  for (long j = 1; j <= n; ++j) num *= quad(-Rat(ipow(p, 2 * j)), 1);
  FormInvariants inv = invariants(T);
  int chi = kronecker(inv.d, p);
  Poly den = lin(-Rat(chi) * Rat(ipow(p, n)), 1);
  return {num, den};
}

SiegelPoly siegel_poly(const HalfIntegralMatrix& T, long p, const SiegelOptions& opt) {
  if (T.size() % 2 != 0) throw ConfigError("siegel_poly needs an even-size form");
  const auto key = std::make_pair(p, T);
  if (opt.useCache) {
    std::lock_guard lock(cacheMutex);
    auto it = cache.find(key);
    if (it != cache.end() && (it->second.oracleChecked || !opt.oracle)) return it->second;
  }
  SiegelPoly F = (T.det_two_t() % p != 0) ? SiegelPoly{p, T.to_string(), T.size(), {Int(1)}, 0}
                                           : finish(T, p, density_by_reduction(T, p));
  if (opt.oracle) {
    SiegelPoly O = siegel_poly_from_oracle(T, p, opt.maxDepth);
    if (O.coeffs != F.coeffs)
      throw ConsistencyError("Siegel recursion disagrees with the density oracle for 2T=" +
                             T.to_string() + " p=" + std::to_string(p) + ": recursion " +
                             F.as_poly().to_string() + ", oracle " + O.as_poly().to_string());
    F.oracleChecked = true;
    F.oracleDepth = O.oracleDepth;
  }
  if (opt.useCache) {
    std::lock_guard lock(cacheMutex);
    cache[key] = F;
  }
  return F;
}

SiegelPoly siegel_poly_from_oracle(const HalfIntegralMatrix& T, long p, int maxDepth) {
  DensityPoly d = density_polynomial(T, p, maxDepth);
  SiegelPoly F = finish(T, p, d.alpha);
  F.oracleChecked = true;
  F.oracleDepth = d.depth;
  return F;
}

SymmetricLaurentPoly normalize(const SiegelPoly& F) {
  const long p = F.p;
  const long n = static_cast<long>(F.size / 2);
  const long deg = F.degree();
  if (deg % 2 != 0) throw ConsistencyError("odd-degree Siegel series for 2T=" + F.gram);
  const long f = deg / 2;
  auto term = [&](long i) { return HalfPowerScalar(p, Rat(F.coeffs[i]), -i * (2 * n + 1)); };
  std::vector<HalfPowerScalar> pairs;
  for (long j = 1; j <= f; ++j) {
    HalfPowerScalar up = term(f + j), down = term(f - j);
    if (!(up == down))
      throw ConsistencyError("functional equation fails for 2T=" + F.gram + " at p=" +
                             std::to_string(p) + ": X^" + std::to_string(j) + " has " +
                             up.to_string() + ", X^-" + std::to_string(j) + " has " +
                             down.to_string());
    pairs.push_back(up);
  }
  return SymmetricLaurentPoly(p, term(f), std::move(pairs));
}

}  // namespace ikeda
