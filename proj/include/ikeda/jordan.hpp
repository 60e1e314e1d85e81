#pragma once

#include <vector>

#include "ikeda/quadform.hpp"

namespace ikeda {

using RatSquare = std::vector<std::vector<Rat>>;

struct JordanBlock {
  long exponent;     ///< scale p^exponent
  RatSquare unit;    ///< 1x1 or (p = 2 only) 2x2 even unimodular block
};

/// Orthogonal splitting of 2T over Z_p into scaled unimodular blocks,
/// ordered by increasing scale.
struct JordanSplitting {
  long p;
  std::vector<JordanBlock> blocks;
  long det_valuation() const;
  std::size_t rank() const;
};

/// Works on any p-integral symmetric matrix with even diagonal when p = 2.
JordanSplitting jordan(const RatSquare& twoT, long p);
JordanSplitting jordan(const HalfIntegralMatrix& T, long p);

/// Reduction of the quadratic form x -> T[x] modulo p.
struct ModPData {
  long rank;  ///< rank of the nondegenerate part
  int eps;    ///< +1 split, -1 nonsplit, 0 for odd rank
  int delta;  ///< p = 2: the radical carries a nonzero linear form
};

ModPData modp_data(const JordanSplitting& J);

RatSquare to_rat(const HalfIntegralMatrix& T);

}  // namespace ikeda
