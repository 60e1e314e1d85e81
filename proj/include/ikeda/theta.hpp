#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ikeda/quadform.hpp"

namespace ikeda {

inline constexpr int kLatticeDim = 16;
/// Largest norm short_vectors will tabulate.
inline constexpr long kMaxShortNorm = 8;

/// Lattice vector in doubled ambient coordinates (2v in Z^16).
using LatticeVector = std::array<std::int8_t, kLatticeDim>;

class EvenLattice {
 public:
  static const EvenLattice& e8e8();
  static const EvenLattice& d16plus();
  /// "e8e8" or "d16p"; ConfigError otherwise.
  static const EvenLattice& by_name(const std::string& name);

  const std::string& name() const { return name_; }
  const IntMatrix& gram() const { return gram_; }
  /// Rows are basis vectors in doubled ambient coordinates.
  const std::vector<LatticeVector>& basis() const { return basis_; }

 private:
  EvenLattice(std::string name, std::vector<LatticeVector> basis);
  std::string name_;
  std::vector<LatticeVector> basis_;
  IntMatrix gram_;
};

/// <x, y> for doubled coordinates.
inline long inner(const LatticeVector& x, const LatticeVector& y) {
  long s = 0;
  for (int i = 0; i < kLatticeDim; ++i) s += static_cast<long>(x[i]) * y[i];
  return s / 4;
}

/// Nonzero vectors of norm <= normBound grouped by norm (Fincke-Pohst on the Gram
/// matrix, pruning with the LDL^t factorization scaled to integers). Cached.
const std::map<long, std::vector<LatticeVector>>& short_vectors(const EvenLattice& L,
                                                                long normBound);

/// #{(x_1..x_g) in L^g : (x_i, x_j) = 2T_ij}, g <= 4. Throws BoundError when a
/// diagonal entry exceeds kMaxShortNorm.
Int theta_coefficient(const EvenLattice& L, const HalfIntegralMatrix& T);
/// Same count by plain candidate filtering in the given column order, without the
/// Weyl orbit pinning or root bitsets; slow, for cross-checks.
Int theta_coefficient(const EvenLattice& L, const HalfIntegralMatrix& T,
                      const std::vector<std::size_t>& order);

/// theta_{E8+E8}(T) - theta_{D16+}(T)
Int schottky_coefficient(const HalfIntegralMatrix& T);

}  // namespace ikeda
