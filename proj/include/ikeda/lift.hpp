#pragma once

#include <map>
#include <string>
#include <vector>

#include "ikeda/elliptic.hpp"
#include "ikeda/kohnen.hpp"
#include "ikeda/poly.hpp"
#include "ikeda/quadform.hpp"
#include "ikeda/report.hpp"

namespace ikeda {

/// Lift of the weight-2kappa eigenform to a Siegel form of degree 2n and weight kappa + n.
struct LiftJob {
  unsigned kappa;
  unsigned n;
  EllipticEigenform eigenform;
  PlusSpaceForm h;
};

/// Throws ConfigError unless kappa + n is even and kappa is supported.
/// hBound is the largest |d| the h table must cover; primeBound the largest p needing a(p).
LiftJob make_job(unsigned kappa, unsigned n, long hBound, long primeBound);

struct LiftCoefficient {
  HalfIntegralMatrix T;
  long det2T;
  long D;
  long d;
  long f;
  long cArg;                   ///< |d|
  std::map<long, Rat> localFactors;  ///< G_p for every p | det(2T)
  Rat value;
};

/// a(T) = c(|d|) prod_p G_p with G_p = p^{(2kappa-1) f_p / 2} F~_p(T, Satake point).
/// Each G_p is assembled from half-power terms; a surviving sqrt(p) throws ConsistencyError.
LiftCoefficient lift_coefficient(const LiftJob& job, const HalfIntegralMatrix& T);

/// Coefficients for the given forms, ordered by det(2T) then 2T, computed on `threads` workers.
std::vector<LiftCoefficient> fourier_table(const LiftJob& job,
                                           std::vector<HalfIntegralMatrix> forms,
                                           unsigned threads = 1);

/// Classical Maass relation a(T) = sum_{e | (a, r, b)} e^kappa c((4ab - r^2) / e^2)
/// over reduced binary T with det(2T) <= detBound.
Report maass_check(const LiftJob& job, long detBound);

/// GL(Z)-invariance a(T[U]) = a(T) for `samples` random U per form.
Report invariance_check(const LiftJob& job, const std::vector<HalfIntegralMatrix>& forms,
                        int samples, std::uint64_t seed);

/// (1 - t) prod_{i=1}^{2n} (1 - a(p) p^{-(kappa+n-i)} t + p^{-(2n-2i+1)} t^2), t = p^-s.
Poly standard_l_factor(const LiftJob& job, long p);

}  // namespace ikeda
