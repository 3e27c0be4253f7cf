#pragma once

// Brute-force references used to cross-check the kernel.

#include "tolpoly/halfspace.hpp"
#include "tolpoly/linalg.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using tolpoly::Matrix;
using tolpoly::Scalar;
using tolpoly::Vec;

inline void subsets(std::size_t m, std::size_t k, const auto& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > m) return;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Unique solution of the square system rows[idx] x = b[idx], if any.
inline std::optional<Vec> solve_square(const std::vector<tolpoly::TaggedHalfSpace>& rows,
                                       const std::vector<std::size_t>& idx, std::size_t n) {
  Matrix aug;
  for (auto i : idx) {
    Vec r = rows[i].normal;
    r.push_back(rows[i].offset);
    aug.push_back(std::move(r));
  }
  auto e = tolpoly::rref(aug, n + 1);
  if (e.pivots.size() != n || e.pivots.back() == n) return std::nullopt;
  Vec x(n);
  for (std::size_t r = 0; r < n; ++r) x[r] = e.rows[r][n];
  return x;
}

// Vertices by trying every n-subset of rows.
inline std::vector<Vec> vertices(const std::vector<tolpoly::TaggedHalfSpace>& rows, std::size_t n) {
  std::vector<Vec> out;
  subsets(rows.size(), n, [&](const std::vector<std::size_t>& idx) {
    auto x = solve_square(rows, idx, n);
    if (!x) return;
    for (const auto& r : rows)
      if (!r.contains(*x)) return;
    out.push_back(*x);
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Facets of a full-dimensional hull: hyperplanes through n affinely independent
// points with everything on one side, in (primitive normal, offset) form.
inline std::vector<std::pair<Vec, Scalar>> facets(const std::vector<Vec>& pts, std::size_t n) {
  std::vector<std::pair<Vec, Scalar>> out;
  subsets(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    Matrix m;
    for (auto i : idx) {
      Vec r = pts[i];
      r.push_back(-1);
      m.push_back(std::move(r));
    }
    auto ns = tolpoly::nullspace(m, n + 1);
    if (ns.size() != 1) return;
    Vec a(ns[0].begin(), ns[0].begin() + static_cast<std::ptrdiff_t>(n));
    if (tolpoly::is_zero(a)) return;
    Scalar beta = ns[0][n];
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& p : pts)
        if (sign * tolpoly::dot(a, p) > sign * beta) ok = false;
      if (ok) {
        auto h = tolpoly::canonicalize(tolpoly::scale(a, sign), beta * sign);
        out.emplace_back(h.normal, h.offset);
      }
    }
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline Vec random_point(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  Vec v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

}  // namespace oracle
