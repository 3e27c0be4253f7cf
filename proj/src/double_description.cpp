#include "tolpoly/double_description.hpp"

#include "tolpoly/error.hpp"

#include <bit>
#include <cstdint>

namespace tolpoly {

namespace {

class RowSet {
 public:
  explicit RowSet(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  RowSet operator&(const RowSet& o) const {
    RowSet r = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
    return r;
  }

  bool subset_of(const RowSet& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  Vec v;
  RowSet zero;
};

}  // namespace

std::vector<Vec> extreme_rays(const Matrix& G, std::size_t d) {
  const std::size_t m = G.size();

  std::vector<std::size_t> basis_rows;
  std::vector<bool> used(m, false);
  Matrix selected;
  for (std::size_t i = 0; i < m && basis_rows.size() < d; ++i) {
    selected.push_back(G[i]);
    if (rank(selected, d) == selected.size()) {
      basis_rows.push_back(i);
      used[i] = true;
    } else {
      selected.pop_back();
    }
  }
  if (basis_rows.size() < d)
    throw Error(ErrorKind::InvariantViolation, "double description needs a pointed cone");

  // Columns of -B^{-1}: ray j is tight on every basis row except row j.
  Matrix aug(d, zeros(2 * d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) aug[r][c] = selected[r][c];
    aug[r][d + r] = 1;
  }
  const RowEchelon inv = rref(aug, 2 * d);

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < d; ++j) {
    Vec v(d);
    for (std::size_t r = 0; r < d; ++r) v[r] = -inv.rows[r][d + j];
    Ray ray{primitive(v), RowSet(m)};
    for (std::size_t k = 0; k < d; ++k)
      if (k != j) ray.zero.set(basis_rows[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (used[i]) continue;
    const Vec& g = G[i];

    std::vector<Scalar> s(rays.size());
    std::vector<std::size_t> plus, minus, zero;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      s[k] = dot(g, rays[k].v);
      const int sign = sgn(s[k]);
      (sign > 0 ? plus : sign < 0 ? minus : zero).push_back(k);
    }
    if (plus.empty()) {
      for (auto k : zero) rays[k].zero.set(i);
      continue;
    }

    std::vector<Ray> next;
    for (auto q : plus) {
      for (auto p : minus) {
        const RowSet common = rays[p].zero & rays[q].zero;
        if (d >= 2 && common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == p || k == q) continue;
          if (common.subset_of(rays[k].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        // s[q] > 0 > s[p]; the combination is tight on row i.
        Vec v(d);
        for (std::size_t c = 0; c < d; ++c) v[c] = s[q] * rays[p].v[c] - s[p] * rays[q].v[c];
        Ray ray{primitive(v), common};
        ray.zero.set(i);
        next.push_back(std::move(ray));
      }
    }
    for (auto k : minus) next.push_back(std::move(rays[k]));
    for (auto k : zero) {
      rays[k].zero.set(i);
      next.push_back(std::move(rays[k]));
    }
    rays = std::move(next);
  }

  std::vector<Vec> out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.v));
  return out;
}

}  // namespace tolpoly
