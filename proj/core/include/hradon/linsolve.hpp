#pragma once

#include <vector>

#include "hradon/rational.hpp"

namespace hradon {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major, ragged rows forbidden

/// Basis of the right null space of a (possibly non-square) matrix.
std::vector<RatVec> kernel_basis(RatMat a, std::size_t cols);

std::size_t matrix_rank(RatMat a);

}  // namespace hradon
