// One line per acceptance criterion. Every comparison is exact (tolerance 0);
// the runtime budgets below are the only tolerances.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "ikeda/arith.hpp"
#include "ikeda/error.hpp"
#include "ikeda/fixtures.hpp"
#include "ikeda/kohnen.hpp"
#include "ikeda/lift.hpp"
#include "ikeda/theta.hpp"
#include "ikeda/verify.hpp"

using namespace ikeda;

namespace {

constexpr long kShimuraBound = 500;
constexpr double kShimuraBudget = 60;
constexpr long kOracleBinaryDet = 120;
constexpr long kOraclePPart = 16;
constexpr double kOracleBudget = 600;
constexpr long kMaassDet = 200;
constexpr double kMaassBudget = 60;
constexpr long kSchottkyTrace = 10;
constexpr double kSchottkyBudget = 900;
constexpr long kFunceqDet = 500;
constexpr long kFunceqTrace = 12;
constexpr int kInvarianceSamples = 50;
constexpr long kNullTrace = 10;
const std::vector<unsigned> kKappas = {6, 8, 9, 10, 11, 13};

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget, const std::function<Outcome()>& body) {
  auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream time;
  time.precision(1);
  time << std::fixed << secs << "s";
  if (budget > 0 && secs > budget) {
    o.pass = false;
    o.detail += "; over the " + std::to_string(static_cast<int>(budget)) + "s budget";
  }
  if (!o.pass) ++failures;
  std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail
            << " [" << time.str() << "]" << std::endl;
}

std::string first_failure(const Report& r) {
  if (r.ok()) return "";
  const auto& f = r.failures.front();
  return "; first failure " + f.subject + ": " + f.reason + " expected=" + f.expected + " actual=" + f.actual;
}

std::filesystem::path fixture_dir() {
  if (std::getenv("ENGINE_FIXTURES")) return FixtureStore::default_dir();
  return IKEDA_SOURCE_FIXTURES;
}

long max_det(const std::vector<HalfIntegralMatrix>& forms) {
  long m = 4;
  for (const auto& T : forms) m = std::max(m, T.det_two_t().get_si());
  return m;
}

}  // namespace

int main() {
  const auto binary = enumerate_binary(kMaassDet);
  const auto quaternary = enumerate_by_trace(4, kSchottkyTrace);
  LiftJob job9 = make_job(9, 1, kFunceqDet, kFunceqDet);
  LiftJob job6 = make_job(6, 2, max_det(quaternary), max_det(quaternary));

  criterion(1, "Shimura factorization", kShimuraBudget, [] {
    Report all{"shimura", 0, {}};
    for (unsigned k : kKappas) {
      const unsigned n = k % 2 ? 1 : 2;  // the only sign allowed by kappa + n even
      all.merge(shimura_consistency(plus_space_eigenform(k, n, kShimuraBound), eigenform(2 * k),
                                    kShimuraBound));
    }
    return Outcome{all.ok() && all.cases > 0,
                   std::to_string(all.cases) + " coefficients, t <= " + std::to_string(kShimuraBound) +
                       ", 6 weights, " + std::to_string(all.failures.size()) + " failures" + first_failure(all)};
  });

  criterion(2, "Siegel series ground truth", kOracleBudget, [] {
    FixtureStore store(fixture_dir());
    auto bin = binary_oracle_cases(kOracleBinaryDet, {2, 3, 5}, kOraclePPart);
    Report rb = oracle_check(bin, store, true);
    auto quat = quaternary_oracle_cases();
    // D4 is recounted on every run; the other quaternary forms come from stored oracle output.
    Report rq = oracle_check({quat.front()}, store, true);
    rq.merge(oracle_check({quat.begin() + 1, quat.end()}, store, false));
    bool ok = rb.ok() && rq.ok() && rb.cases >= 40 && rq.cases >= 3;
    return Outcome{ok, std::to_string(rb.cases) + " binary (p in {2,3,5}, p-part <= 16), " +
                           std::to_string(rq.cases) + " quaternary at p = 2, " +
                           std::to_string(rb.failures.size() + rq.failures.size()) + " mismatches" +
                           first_failure(rb) + first_failure(rq)};
  });

  criterion(3, "functional equation, b_0 and degree", 0, [] {
    auto forms = enumerate_binary(kFunceqDet);
    auto quat = enumerate_by_trace(4, kFunceqTrace);
    forms.insert(forms.end(), quat.begin(), quat.end());
    Report r = funceq_check(forms);
    return Outcome{r.ok(), std::to_string(r.cases) + " (form, p) pairs: binary det <= " +
                               std::to_string(kFunceqDet) + ", size 4 trace <= " +
                               std::to_string(kFunceqTrace) + first_failure(r)};
  });

  criterion(4, "rationality of local factors", 0, [&] {
    long factors = 0, bad = 0;
    std::string first;
    auto run = [&](const LiftJob& job, const std::vector<HalfIntegralMatrix>& forms) {
      for (const auto& T : forms) {
        try {
          factors += static_cast<long>(lift_coefficient(job, T).localFactors.size());
        } catch (const ConsistencyError& e) {
          if (!bad++) first = e.what();
        }
      }
    };
    run(job9, binary);
    run(job6, quaternary);
    return Outcome{bad == 0, std::to_string(factors) + " factors G_p rational, " + std::to_string(bad) +
                                 " coefficients with a surviving sqrt(p)" + (first.empty() ? "" : "; " + first)};
  });

  criterion(5, "Maass relation (kappa 9)", kMaassBudget, [&] {
    Report r = maass_check(job9, kMaassDet);
    return Outcome{r.ok() && r.cases > 0, std::to_string(r.cases) + " forms with det(2T) <= " +
                                              std::to_string(kMaassDet) + ", " +
                                              std::to_string(r.failures.size()) + " failures" + first_failure(r)};
  });

  criterion(6, "Schottky identity (kappa 6, degree 4)", kSchottkyBudget, [&] {
    FixtureStore store(fixture_dir());
    SchottkyResult res = schottky_check(job6, quaternary, &store, true);
    bool ok = res.report.ok() && res.ratio && *res.ratio != 0 && res.bothNonzero >= 10;
    long zeros = 0;
    for (const auto& row : res.rows) zeros += row.theta == 0;
    return Outcome{ok, std::to_string(res.rows.size()) + " size-4 forms (trace <= " +
                           std::to_string(kSchottkyTrace) + "), " + std::to_string(res.bothNonzero) +
                           " nonzero, " + std::to_string(zeros) + " common zeros, ratio " +
                           (res.ratio ? to_string(*res.ratio) : "none") + first_failure(res.report)};
  });

  criterion(7, "GL(Z) invariance", 0, [&] {
    Report r = invariance_check(job9, binary, kInvarianceSamples, 20261016);
    r.merge(invariance_check(job6, quaternary, kInvarianceSamples, 20261017));
    return Outcome{r.ok(), std::to_string(r.cases) + " transformed coefficients (" +
                               std::to_string(kInvarianceSamples) + " U per form, both jobs)" +
                               first_failure(r)};
  });

  criterion(8, "eligibility gates and supports", 0, [] {
    long configs = 0, checked = 0;
    std::string bad;
    for (unsigned k = 1; k <= 30; ++k)
      for (unsigned n = 1; n <= 4; ++n) {
        ++configs;
        const bool allowed = (k + n) % 2 == 0 && is_supported_kappa(k);
        bool accepted = true;
        try {
          plus_space_eigenform(k, n, 8);
        } catch (const ConfigError&) {
          accepted = false;
        }
        if (accepted != allowed && bad.empty())
          bad = "kappa=" + std::to_string(k) + " n=" + std::to_string(n);
      }
    for (unsigned k : kKappas)
      for (unsigned n : {1u, 2u}) {
        if ((k + n) % 2) continue;
        PlusSpaceForm h = plus_space_eigenform(k, n, kShimuraBound);
        const int sign = n % 2 ? -1 : 1;
        for (long t = 1; t <= kShimuraBound; ++t) {
          ++checked;
          long cls = ((sign * t) % 4 + 4) % 4;
          bool square = cls == 0 || cls == 1;
          if ((h.in_support(t) != square || (!square && h.coeff(t) != 0)) && bad.empty())
            bad = "support kappa=" + std::to_string(k) + " t=" + std::to_string(t);
        }
      }
    return Outcome{bad.empty(), std::to_string(configs) + " (kappa, n) configurations, " +
                                    std::to_string(checked) + " table entries" +
                                    (bad.empty() ? "" : "; mismatch at " + bad)};
  });

  criterion(9, "theta null test in degree <= 3", 0, [] {
    std::vector<HalfIntegralMatrix> forms;
    for (std::size_t m = 1; m <= 3; ++m)
      for (const auto& T : enumerate_by_trace(m, kNullTrace)) {
        bool fits = true;
        for (std::size_t i = 0; i < m; ++i) fits = fits && T.two_t(i, i) <= kMaxShortNorm;
        if (fits) forms.push_back(T);
      }
    Report r = theta_null_check(forms);
    return Outcome{r.ok(), std::to_string(r.cases) + " forms of size 1-3, trace <= " +
                               std::to_string(kNullTrace) + first_failure(r)};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
