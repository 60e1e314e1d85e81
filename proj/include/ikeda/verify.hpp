#pragma once

#include <optional>
#include <vector>

#include "ikeda/fixtures.hpp"
#include "ikeda/lift.hpp"
#include "ikeda/report.hpp"

namespace ikeda {

/// b_0 = 1, degree 2 f_p, integrality and F~(X) = F~(1/X) at every p | det(2T).
Report funceq_check(const std::vector<HalfIntegralMatrix>& forms);

/// Recursion against the density oracle for each (form, prime) pair.
Report oracle_check(const std::vector<std::pair<HalfIntegralMatrix, long>>& cases,
                    FixtureStore& store, bool recheck);

/// Binary reduced forms with det(2T) <= detBound and p-part of det(2T) at most
/// ppartBound, paired with each such p in primes.
std::vector<std::pair<HalfIntegralMatrix, long>> binary_oracle_cases(
    long detBound, const std::vector<long>& primes, long ppartBound);

/// Quaternary forms whose oracle fits the candidate guard at p = 2 (four forms).
std::vector<std::pair<HalfIntegralMatrix, long>> quaternary_oracle_cases();

struct SchottkyRow {
  HalfIntegralMatrix T;
  Rat lift;
  Int theta;
};

struct SchottkyResult {
  Report report;
  std::vector<SchottkyRow> rows;
  std::optional<Rat> ratio;  ///< a(T) / theta difference, when some row has both nonzero
  long bothNonzero = 0;
};

/// Compares the kappa = 6, n = 2 lift with theta_{E8+E8} - theta_{D16+} over the forms.
SchottkyResult schottky_check(const LiftJob& job, const std::vector<HalfIntegralMatrix>& forms,
                              FixtureStore* store, bool recheck);

/// Schottky difference vanishes on every form (sizes 1 to 3).
Report theta_null_check(const std::vector<HalfIntegralMatrix>& forms);

}  // namespace ikeda
