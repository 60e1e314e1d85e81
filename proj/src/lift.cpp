#include "ikeda/lift.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <optional>
#include <thread>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/siegel_series.hpp"

namespace ikeda {

LiftJob make_job(unsigned kappa, unsigned n, long hBound, long primeBound) {
  if (n == 0) throw ConfigError("degree must be positive");
  if ((kappa + n) % 2 != 0)
    throw ConfigError("kappa + n must be even (kappa=" + std::to_string(kappa) +
                      ", n=" + std::to_string(n) + ")");
  if (!is_supported_kappa(kappa))
    throw ConfigError("kappa=" + std::to_string(kappa) +
                      " is not supported (need dim S_2kappa = 1: 6, 8, 9, 10, 11, 13)");
  std::size_t precision = std::max<std::size_t>(kDefaultEllipticPrecision,
                                                static_cast<std::size_t>(primeBound) + 1);
  return LiftJob{kappa, n, eigenform(2 * kappa, precision),
                 plus_space_eigenform(kappa, n, std::max(hBound, 4L))};
}

LiftCoefficient lift_coefficient(const LiftJob& job, const HalfIntegralMatrix& T) {
  if (T.size() != 2 * job.n)
    throw ConfigError("form 2T=" + T.to_string() + " has size " + std::to_string(T.size()) +
                      ", job expects " + std::to_string(2 * job.n));
  FormInvariants inv = invariants(T);
  LiftCoefficient out{T, inv.detTwoT.get_si(), inv.D, inv.d, inv.fTotal, std::labs(inv.d), {}, 0};
  out.value = job.h.coeff(out.cArg);
  const long w = 2 * static_cast<long>(job.kappa) - 1;
  for (auto [p, e] : factorize(out.det2T)) {
    (void)e;
    SymmetricLaurentPoly Ft = normalize(siegel_poly(T, p));
    long fp = inv.fAtP.count(p) ? inv.fAtP.at(p) : 0;
    HalfPowerScalar g = HalfPowerScalar(p, 1, w * fp) *
                        sym_laurent_eval_chebyshev(Ft, job.eigenform.eigenvalue(p), w);
    if (!g.is_rational())
      throw ConsistencyError("residual half-power p^(" + std::to_string(g.half_exponent()) +
                             "/2) in G_" + std::to_string(p) + " for 2T=" + T.to_string());
    Rat gp = g.to_rational();
    out.localFactors[p] = gp;
    out.value *= gp;
  }
  return out;
}

std::vector<LiftCoefficient> fourier_table(const LiftJob& job,
                                           std::vector<HalfIntegralMatrix> forms,
                                           unsigned threads) {
  std::sort(forms.begin(), forms.end(), det_lex_less);
  std::vector<std::optional<LiftCoefficient>> slots(forms.size());
  std::vector<std::exception_ptr> errors(forms.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < forms.size();) {
      try {
        slots[i] = lift_coefficient(job, forms[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < std::max(threads, 1u); ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();

  // Report the first failure in table order so the diagnostic does not depend on scheduling.
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (!errors[i]) continue;
    const std::string where = " [2T=" + forms[i].to_string() + "]";
    try {
      std::rethrow_exception(errors[i]);
    } catch (const ConsistencyError& e) {
      throw ConsistencyError(e.what() + where);
    } catch (const BoundError& e) {
      throw BoundError(e.what() + where);
    }
  }
  std::vector<LiftCoefficient> out;
  out.reserve(forms.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

Report maass_check(const LiftJob& job, long detBound) {
  if (job.n != 1) throw ConfigError("maass_check needs n = 1");
  Report report{"maass", 0, {}};
  for (const auto& T : enumerate_binary(detBound)) {
    ++report.cases;
    const long a = T.two_t(0, 0) / 2, r = T.two_t(0, 1), b = T.two_t(1, 1) / 2;
    const long det = 4 * a * b - r * r;
    Rat expected = 0;
    for (long e : divisors(std::gcd(std::gcd(a, std::labs(r)), b)))
      expected += Rat(ipow(e, job.kappa)) * job.h.coeff(det / (e * e));
    try {
      Rat actual = lift_coefficient(job, T).value;
      if (actual != expected)
        report.failures.push_back({T.to_string(), to_string(expected), to_string(actual),
                                   "Maass relation"});
    } catch (const Error& err) {
      report.failures.push_back({T.to_string(), to_string(expected), "", err.what()});
    }
  }
  return report;
}

Report invariance_check(const LiftJob& job, const std::vector<HalfIntegralMatrix>& forms,
                        int samples, std::uint64_t seed) {
  Report report{"invariance", 0, {}};
  std::uint64_t s = seed;
  for (const auto& T : forms) {
    Rat base = lift_coefficient(job, T).value;
    for (int i = 0; i < samples; ++i) {
      ++report.cases;
      IntMatrix U = random_unimodular(T.size(), 2, s++);
      HalfIntegralMatrix TU = T.transform(U);
      try {
        Rat v = lift_coefficient(job, TU).value;
        if (v != base)
          report.failures.push_back({T.to_string() + " -> " + TU.to_string(), to_string(base),
                                     to_string(v), "a(T[U]) != a(T)"});
      } catch (const Error& err) {
        report.failures.push_back({TU.to_string(), to_string(base), "", err.what()});
      }
    }
  }
  return report;
}

Poly standard_l_factor(const LiftJob& job, long p) {
  const Int& ap = job.eigenform.eigenvalue(p);
  const long kn = job.kappa + job.n;
  Poly L({Rat(1), Rat(-1)});
  for (long i = 1; i <= 2 * static_cast<long>(job.n); ++i)
    L *= Poly({Rat(1), -Rat(ap) * rpow(Rat(p), -(kn - i)),
               rpow(Rat(p), -(2 * static_cast<long>(job.n) - 2 * i + 1))});
  return L;
}

}  // namespace ikeda
