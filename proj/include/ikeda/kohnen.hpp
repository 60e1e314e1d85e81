#pragma once

#include <string>
#include <vector>

#include "ikeda/elliptic.hpp"
#include "ikeda/half_power.hpp"
#include "ikeda/report.hpp"

namespace ikeda {

/// Index-one Jacobi form, stored through C(D) = c(n, r) with D = 4n - r^2.
struct JacobiForm {
  unsigned weight;
  std::vector<Rat> coeff;  ///< coeff[D] for 0 <= D <= bound

  long bound() const { return static_cast<long>(coeff.size()) - 1; }
  Rat C(long D) const;
  bool is_cusp() const { return coeff.at(0) == 0; }
};

/// E_{k,1} for k in {4, 6}, normalized to C(0) = 1.
JacobiForm jacobi_eisenstein(unsigned k, long bound);

/// Basis of the cusp forms in M_{k-4} E_{4,1} + M_{k-6} E_{6,1}; empty for odd k
/// since index-one forms of odd weight vanish identically.
std::vector<JacobiForm> jacobi_cusp_space(unsigned k, long bound);

/// dim M_k(SL_2(Z)) and dim S_k(SL_2(Z)).
int dim_modular_forms(int k);
int dim_cusp_forms(int k);

/// Coefficients of the Kohnen plus-space eigenform attached to weight 2 kappa.
class PlusSpaceForm {
 public:
  PlusSpaceForm(unsigned kappa, int sign, std::vector<Rat> c, std::string normalization);

  unsigned kappa() const { return kappa_; }
  /// (-1)^n
  int sign() const { return sign_; }
  long bound() const { return static_cast<long>(c_.size()) - 1; }
  const std::string& normalization() const { return normalization_; }
  /// sign * t = 0, 1 mod 4
  bool in_support(long t) const;
  /// Throws BoundError beyond the table.
  const Rat& coeff(long t) const;
  PlusSpaceForm scaled(const Rat& lambda) const;

 private:
  unsigned kappa_;
  int sign_;
  std::vector<Rat> c_;
  std::string normalization_;
};

bool is_supported_kappa(unsigned kappa);

/// The eigenform h for (kappa, n) tabulated for 0 <= t <= bound, first nonzero
/// coefficient equal to one. Odd kappa goes through Jacobi forms of weight
/// kappa + 1; even kappa through the theta/F basis of M_{kappa+1/2}(Gamma_0(4)).
PlusSpaceForm plus_space_eigenform(unsigned kappa, unsigned n, long bound);

/// Plus-space cusp form built from theta^(2kappa+1-4j) F^j, F = sum_{n odd} sigma_1(n) q^n.
PlusSpaceForm plus_space_from_theta_basis(unsigned kappa, long bound);
/// Plus-space cusp form built from the Jacobi cusp form of weight kappa + 1 (odd kappa).
PlusSpaceForm plus_space_from_jacobi(unsigned kappa, long bound);

struct PsiPoly {
  long p;
  long t;     ///< signed argument sign * t
  long fExp;  ///< f_p^t
  SymmetricLaurentPoly poly;
};

/// Psi from its exponent f and chi(p) in {-1, 0, 1}; zero for f < 0.
SymmetricLaurentPoly psi_from_exponent(long p, long f, int chi);
/// Psi_p(sign * t, X); sign * t must be 0 or 1 mod 4.
PsiPoly psi_poly(long t, long p, int sign);

/// p^((kappa - 1/2) f) Psi_p(t', X) evaluated at the Satake point of a(p), as a rational.
Rat psi_local_factor(const PsiPoly& psi, const Int& ap, unsigned kappa);

/// Checks c_h(t) = c_h(|d|) f_t^(kappa-1/2) prod_p Psi_p at every supported t <= bound.
Report shimura_consistency(const PlusSpaceForm& h, const EllipticEigenform& f, long bound);

}  // namespace ikeda
