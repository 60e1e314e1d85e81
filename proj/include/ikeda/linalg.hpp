#pragma once

#include <vector>

#include "ikeda/rational.hpp"

namespace ikeda {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Basis of {x : A x = 0} for a matrix given by rows with ncols columns,
/// in reduced form (each basis vector has a 1 at its own free column).
RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols);

/// Exact determinant by fraction-free elimination.
Int determinant(const std::vector<std::vector<Int>>& m);

}  // namespace ikeda
