#pragma once

#include <string>
#include <vector>

namespace ikeda {

struct Failure {
  std::string subject;  ///< what was checked, e.g. "t=48" or a Gram matrix
  std::string expected;
  std::string actual;
  std::string reason;
};

/// Outcome of a verification sweep; an empty failure list means the identity held.
struct Report {
  std::string suite;
  long cases = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void merge(const Report& other) {
    cases += other.cases;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  }
};

}  // namespace ikeda
