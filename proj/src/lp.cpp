#include "tolpoly/lp.hpp"

#include <limits>

namespace tolpoly::lp {

namespace {

struct StandardResult {
  Status status = Status::Infeasible;
  Scalar value;
  Vec pi;  // simplex multipliers for the equality rows
};

class Tableau {
 public:
  Tableau(const Matrix& E, const Vec& rhs, std::size_t cols)
      : m_(E.size()), cols_(cols), total_(cols + E.size()), sign_(E.size(), 1) {
    T_.assign(m_, zeros(total_));
    rhs_ = rhs;
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(rhs[i]) < 0;
      sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < cols_; ++j) T_[i][j] = flip ? Scalar(-E[i][j]) : E[i][j];
      if (flip) rhs_[i] = -rhs_[i];
      T_[i][cols_ + i] = 1;
      basis_[i] = cols_ + i;
    }
  }

  /// min cost.y over the current feasible basis.
  void set_cost(const Vec& cost) {
    cost_ = cost;
    d_ = cost;
    z_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Scalar& cb = cost_[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < total_; ++j) d_[j] -= cb * T_[i][j];
      z_ += cb * rhs_[i];
    }
  }

  /// Returns false when the objective is unbounded below.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = total_;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (sgn(d_[j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == total_) return true;

      std::size_t leave = m_;
      Scalar best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(T_[i][enter]) <= 0) continue;
        Scalar ratio = rhs_[i] / T_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Scalar inv = 1 / T_[r][c];
    for (std::size_t j = 0; j < total_; ++j)
      if (sgn(T_[r][j]) != 0) T_[r][j] *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(T_[i][c]) == 0) continue;
      const Scalar f = T_[i][c];
      for (std::size_t j = 0; j < total_; ++j)
        if (sgn(T_[r][j]) != 0) T_[i][j] -= f * T_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (!d_.empty() && sgn(d_[c]) != 0) {
      const Scalar f = d_[c];
      for (std::size_t j = 0; j < total_; ++j)
        if (sgn(T_[r][j]) != 0) d_[j] -= f * T_[r][j];
      z_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  /// Pivots basic artificials out wherever a structural column allows it.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < cols_) continue;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (sgn(T_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  const Scalar& objective() const { return z_; }

  Vec multipliers() const {
    Vec pi(m_);
    for (std::size_t i = 0; i < m_; ++i) pi[i] = -d_[cols_ + i] * sign_[i];
    return pi;
  }

  std::size_t total() const { return total_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t m_, cols_, total_;
  std::vector<int> sign_;
  Matrix T_;
  Vec rhs_;
  std::vector<std::size_t> basis_;
  Vec cost_;
  Vec d_;
  Scalar z_;
};

// min cost.y subject to E y = rhs, y >= 0.
StandardResult solve_standard(const Matrix& E, const Vec& rhs, const Vec& cost) {
  const std::size_t cols = cost.size();
  Tableau t(E, rhs, cols);

  Vec phase1 = zeros(t.total());
  for (std::size_t j = cols; j < t.total(); ++j) phase1[j] = 1;
  t.set_cost(phase1);
  t.optimize(t.total());
  if (sgn(t.objective()) > 0) return {Status::Infeasible, {}, {}};
  t.expel_artificials();

  Vec phase2 = zeros(t.total());
  for (std::size_t j = 0; j < cols; ++j) phase2[j] = cost[j];
  t.set_cost(phase2);
  if (!t.optimize(cols)) return {Status::Unbounded, {}, {}};
  return {Status::Optimal, t.objective(), t.multipliers()};
}

Matrix transpose(const Matrix& A, std::size_t n) {
  Matrix T(n, zeros(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < n; ++k) T[k][i] = A[i][k];
  return T;
}

}  // namespace

bool feasible(const Matrix& A, const Vec& b, std::size_t n) {
  if (A.empty()) return true;
  // Farkas: infeasible iff some y >= 0 has A^T y = 0 and b.y < 0.
  Matrix E = transpose(A, n);
  E.push_back(Vec(A.size(), Scalar(1)));
  Vec rhs = zeros(n);
  rhs.push_back(1);
  const StandardResult r = solve_standard(E, rhs, b);
  return r.status != Status::Optimal || sgn(r.value) >= 0;
}

Result maximize(const Matrix& A, const Vec& b, const Vec& c) {
  const std::size_t n = c.size();
  if (A.empty()) {
    if (is_zero(c)) return {Status::Optimal, Scalar(0), zeros(n)};
    return {Status::Unbounded, {}, {}};
  }
  const StandardResult dual = solve_standard(transpose(A, n), c, b);
  switch (dual.status) {
    case Status::Optimal:
      return {Status::Optimal, dual.value, dual.pi};
    case Status::Unbounded:
      return {Status::Infeasible, {}, {}};
    case Status::Infeasible:
      break;
  }
  if (!feasible(A, b, n)) return {Status::Infeasible, {}, {}};
  return {Status::Unbounded, {}, {}};
}

}  // namespace tolpoly::lp
