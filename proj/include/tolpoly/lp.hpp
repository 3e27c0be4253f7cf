#pragma once

#include "tolpoly/linalg.hpp"

namespace tolpoly::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  Scalar value;  // optimal objective, when status == Optimal
  Vec x;         // an optimal point, when status == Optimal
};

/// max c.x subject to A x <= b with x free, solved exactly.
///
/// The problem is handed to a two-phase simplex (Bland's rule) on its dual
/// `min b.y, A^T y = c, y >= 0`, whose tableau has only dim(x) rows; the primal
/// optimum is read back from the simplex multipliers.
Result maximize(const Matrix& A, const Vec& b, const Vec& c);

/// Whether {x : A x <= b} is nonempty. `n` is the dimension of x.
bool feasible(const Matrix& A, const Vec& b, std::size_t n);

}  // namespace tolpoly::lp
