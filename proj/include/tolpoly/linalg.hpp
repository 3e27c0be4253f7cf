#pragma once

#include "tolpoly/scalar.hpp"

#include <cstddef>
#include <vector>

namespace tolpoly {

using Matrix = std::vector<Vec>;  // row-major, every row the same length

struct RowEchelon {
  Matrix rows;                       // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form. `cols` is needed when `m` may be empty.
RowEchelon rref(Matrix m, std::size_t cols);

std::size_t rank(const Matrix& m, std::size_t cols);

/// Basis of {x : m x = 0}, itself in reduced row echelon form so the basis is
/// canonical for the subspace.
Matrix nullspace(const Matrix& m, std::size_t cols);

/// Dimension of the affine hull of `points` (-1 for an empty set).
int affine_dimension(const std::vector<Vec>& points);

/// Directions p_i - p_0 for i >= 1.
Matrix difference_vectors(const std::vector<Vec>& points);

}  // namespace tolpoly
