#include "tolpoly/linalg.hpp"

#include <utility>

namespace tolpoly {

RowEchelon rref(Matrix m, std::size_t cols) {
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    const Scalar inv = 1 / m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][col]) == 0) continue;
      const Scalar f = m[r][col];
      for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * m[row][j];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return rref(m, cols).pivots.size(); }

Matrix nullspace(const Matrix& m, std::size_t cols) {
  const RowEchelon e = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v = zeros(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis), cols).rows;
}

Matrix difference_vectors(const std::vector<Vec>& points) {
  Matrix d;
  for (std::size_t i = 1; i < points.size(); ++i) d.push_back(sub(points[i], points[0]));
  return d;
}

int affine_dimension(const std::vector<Vec>& points) {
  if (points.empty()) return -1;
  return static_cast<int>(rank(difference_vectors(points), points[0].size()));
}

}  // namespace tolpoly
