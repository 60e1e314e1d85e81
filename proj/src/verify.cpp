#include "ikeda/verify.hpp"

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/theta.hpp"

namespace ikeda {

Report funceq_check(const std::vector<HalfIntegralMatrix>& forms) {
  Report report{"funceq", 0, {}};
  for (const auto& T : forms) {
    for (auto [p, e] : factorize(T.det_two_t().get_si())) {
      (void)e;
      ++report.cases;
      try {
        // siegel_poly checks b_0, integrality and degree; normalize checks symmetry.
        normalize(siegel_poly(T, p));
      } catch (const ConsistencyError& err) {
        report.failures.push_back({T.to_string() + " p=" + std::to_string(p), "", "", err.what()});
      }
    }
  }
  return report;
}

Report oracle_check(const std::vector<std::pair<HalfIntegralMatrix, long>>& cases,
                    FixtureStore& store, bool recheck) {
  Report report{"oracle", 0, {}};
  for (const auto& [T, p] : cases) {
    ++report.cases;
    try {
      witnessed_siegel(T, p, store, recheck);
    } catch (const Error& err) {
      report.failures.push_back({T.to_string() + " p=" + std::to_string(p), "", "", err.what()});
    }
  }
  return report;
}

std::vector<std::pair<HalfIntegralMatrix, long>> binary_oracle_cases(
    long detBound, const std::vector<long>& primes, long ppartBound) {
  std::vector<std::pair<HalfIntegralMatrix, long>> out;
  for (const auto& T : enumerate_binary(detBound))
    for (long p : primes) {
      long v = valuation(T.det_two_t(), p);
      if (v > 0 && ipow(p, v) <= ppartBound) out.emplace_back(T, p);
    }
  return out;
}

std::vector<std::pair<HalfIntegralMatrix, long>> quaternary_oracle_cases() {
  // 2-adically these are sums of even unimodular planes at scales 1 and 2 (A1^2 + A2 has an
  // odd scale-2 block); the oracle settles at depth 2. 2T = 2 I_4 and A1 + [2,1,0;1,2,1;0,1,4]
  // would need depth 4 (2^40 candidates), which is over the guard.
  return {{parse_gram("2,1,0,0;1,2,1,1;0,1,2,0;0,1,0,2"), 2},
          {parse_gram("2,1,0,0;1,2,0,0;0,0,4,2;0,0,2,8"), 2},
          {parse_gram("2,1,0,0;1,2,0,0;0,0,4,2;0,0,2,4"), 2},
          {parse_gram("2,0,0,0;0,2,0,0;0,0,2,1;0,0,1,2"), 2}};
}

SchottkyResult schottky_check(const LiftJob& job, const std::vector<HalfIntegralMatrix>& forms,
                              FixtureStore* store, bool recheck) {
  SchottkyResult res{{"schottky", 0, {}}, {}, std::nullopt, 0};
  for (const auto& T : forms) {
    ++res.report.cases;
    try {
      Rat a = lift_coefficient(job, T).value;
      std::optional<Int> cached;
      if (store && !recheck) cached = store->schottky(T.to_string());
      Int s = cached ? *cached : schottky_coefficient(T);
      if (store && !cached) store->put_schottky(T.to_string(), s, {"theta-count", 0, today()});
      res.rows.push_back({T, a, s});
      if ((a == 0) != (s == 0)) {
        res.report.failures.push_back({T.to_string(), to_string(Rat(s)), to_string(a),
                                       "lift and theta difference disagree on vanishing"});
        continue;
      }
      if (a == 0) continue;
      ++res.bothNonzero;
      Rat r = a / Rat(s);
      if (!res.ratio) {
        res.ratio = r;
      } else if (*res.ratio != r) {
        res.report.failures.push_back({T.to_string(), to_string(*res.ratio), to_string(r),
                                       "ratio a(T)/theta difference changed"});
      }
    } catch (const Error& err) {
      res.report.failures.push_back({T.to_string(), "", "", err.what()});
    }
  }
  return res;
}

Report theta_null_check(const std::vector<HalfIntegralMatrix>& forms) {
  Report report{"theta-null", 0, {}};
  for (const auto& T : forms) {
    ++report.cases;
    try {
      Int s = schottky_coefficient(T);
      if (s != 0)
        report.failures.push_back({T.to_string(), "0", s.get_str(), "theta difference in degree <= 3"});
    } catch (const Error& err) {
      report.failures.push_back({T.to_string(), "0", "", err.what()});
    }
  }
  return report;
}

}  // namespace ikeda
