#include "tolpoly/polytope.hpp"

#include "tolpoly/double_description.hpp"
#include "tolpoly/error.hpp"
#include "tolpoly/lp.hpp"

#include <algorithm>
#include <string>

namespace tolpoly {

namespace {

void check_dims(const std::vector<TaggedHalfSpace>& rows, std::size_t n) {
  for (const auto& r : rows)
    if (r.normal.size() != n)
      throw Error(ErrorKind::DimMismatch, "half-space of dimension " + std::to_string(r.normal.size()) +
                                              " in a system of dimension " + std::to_string(n));
}

Matrix normals_of(const std::vector<TaggedHalfSpace>& rows) {
  Matrix A;
  A.reserve(rows.size());
  for (const auto& r : rows) A.push_back(r.normal);
  return A;
}

Vec offsets_of(const std::vector<TaggedHalfSpace>& rows) {
  Vec b;
  b.reserve(rows.size());
  for (const auto& r : rows) b.push_back(r.offset);
  return b;
}

// Sequential LP pruning over canonical, sorted, feasible rows.
std::vector<TaggedHalfSpace> prune(std::vector<TaggedHalfSpace> rows) {
  std::vector<bool> removed(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Matrix A;
    Vec b;
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j == i || removed[j]) continue;
      A.push_back(rows[j].normal);
      b.push_back(rows[j].offset);
    }
    const lp::Result r = lp::maximize(A, b, rows[i].normal);
    if (r.status == lp::Status::Optimal && r.value <= rows[i].offset) removed[i] = true;
  }
  std::vector<TaggedHalfSpace> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!removed[i]) out.push_back(std::move(rows[i]));
  return out;
}

void sort_vertices(std::vector<TaggedVertex>& vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return a.coords < b.coords; });
}

std::vector<Vec> unique_points(std::vector<Vec> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Facets (a, beta) of conv(points) for affinely spanning points in R^k.
std::vector<std::pair<Vec, Scalar>> full_dim_facets(const std::vector<Vec>& pts, std::size_t k) {
  Matrix G;
  G.reserve(pts.size());
  for (const auto& p : pts) {
    Vec row = p;
    row.push_back(-1);
    G.push_back(std::move(row));
  }
  std::vector<std::pair<Vec, Scalar>> out;
  for (auto& ray : extreme_rays(G, k + 1)) {
    Vec a(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(k));
    if (is_zero(a)) continue;
    out.emplace_back(std::move(a), ray[k]);
  }
  return out;
}

}  // namespace

std::vector<Vec> TrackedPolytope::vertex_coords() const {
  std::vector<Vec> pts;
  pts.reserve(vertices.size());
  for (const auto& v : vertices) pts.push_back(v.coords);
  return pts;
}

int TrackedPolytope::affine_dim() const { return affine_dimension(vertex_coords()); }

std::size_t TrackedPolytope::count(Tag tag) const {
  return static_cast<std::size_t>(
      std::count_if(halfspaces.begin(), halfspaces.end(), [tag](const auto& h) { return h.tag == tag; }));
}

std::vector<bool> TrackedPolytope::equality_mask() const {
  std::vector<bool> mask(halfspaces.size(), false);
  for (std::size_t i = 0; i < halfspaces.size(); ++i) {
    const Vec opposite = negate(halfspaces[i].normal);
    const Scalar offset = -halfspaces[i].offset;
    for (const auto& h : halfspaces) {
      if (h.normal == opposite && h.offset == offset) {
        mask[i] = true;
        break;
      }
    }
  }
  return mask;
}

void TrackedPolytope::rebuild_incidence() {
  incidence.assign(halfspaces.size(), {});
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    vertices[v].tight.clear();
    for (std::size_t h = 0; h < halfspaces.size(); ++h) {
      if (halfspaces[h].tight_at(vertices[v].coords)) {
        vertices[v].tight.push_back(h);
        incidence[h].push_back(v);
      }
    }
  }
}

TaggedHalfSpace canonicalize_halfspace(Vec normal, Scalar offset, Tag tag, std::string provenance) {
  return canonicalize(std::move(normal), std::move(offset), tag, std::move(provenance));
}

std::vector<TaggedHalfSpace> remove_redundant(std::vector<TaggedHalfSpace> rows, std::size_t n) {
  check_dims(rows, n);
  rows = canonical_set(std::move(rows));
  if (!lp::feasible(normals_of(rows), offsets_of(rows), n))
    throw Error(ErrorKind::EmptyPolytope, "half-space system is infeasible");
  return prune(std::move(rows));
}

TrackedPolytope h_to_v(std::vector<TaggedHalfSpace> rows, std::size_t n) {
  check_dims(rows, n);
  if (rows.empty()) throw Error(ErrorKind::UnboundedInput, "no half-spaces");
  rows = canonical_set(std::move(rows));
  const Matrix A = normals_of(rows);
  if (!lp::feasible(A, offsets_of(rows), n)) throw Error(ErrorKind::EmptyPolytope, "half-space system is infeasible");
  if (rank(A, n) < n) throw Error(ErrorKind::UnboundedInput, "half-space system has a lineality direction");

  // Homogenize: a.x - b t <= 0, -t <= 0. Vertices are the rays with t > 0.
  Matrix G;
  G.reserve(rows.size() + 1);
  for (const auto& r : rows) {
    Vec g = r.normal;
    g.push_back(-r.offset);
    G.push_back(std::move(g));
  }
  Vec t_row = zeros(n + 1);
  t_row[n] = -1;
  G.push_back(std::move(t_row));

  TrackedPolytope P;
  P.dim = n;
  for (const auto& ray : extreme_rays(G, n + 1)) {
    if (sgn(ray[n]) == 0) throw Error(ErrorKind::UnboundedInput, "half-space system has a recession direction");
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ray[i] / ray[n];
    P.vertices.push_back({std::move(x), Tag::NonCap, {}});
  }
  if (P.vertices.empty()) throw Error(ErrorKind::EmptyPolytope, "half-space system is infeasible");
  sort_vertices(P.vertices);

  for (const auto& r : rows)
    if (r.tag == Tag::NonCap) P.underlying.push_back(r);

  if (P.affine_dim() == static_cast<int>(n)) {
    // Full-dimensional: a row is kept iff its tight vertices span a facet.
    const auto pts = P.vertex_coords();
    for (auto& r : rows) {
      std::vector<Vec> on;
      for (const auto& p : pts)
        if (r.tight_at(p)) on.push_back(p);
      if (affine_dimension(on) == static_cast<int>(n) - 1) P.halfspaces.push_back(std::move(r));
    }
  } else {
    P.halfspaces = prune(std::move(rows));
  }

  P.rebuild_incidence();
  for (auto& v : P.vertices) {
    v.tag = Tag::NonCap;
    for (auto h : v.tight)
      if (P.halfspaces[h].tag == Tag::Cap) v.tag = Tag::Cap;
  }
  return P;
}

TrackedPolytope v_to_h(const std::vector<Vec>& input, std::size_t n) {
  if (input.empty()) throw Error(ErrorKind::EmptyPolytope, "convex hull of no points");
  for (const auto& p : input)
    if (p.size() != n) throw Error(ErrorKind::DimMismatch, "point dimension differs from ambient dimension");
  const std::vector<Vec> pts = unique_points(input);
  const Vec& p0 = pts.front();
  const RowEchelon dirs = rref(difference_vectors(pts), n);
  const std::size_t k = dirs.pivots.size();

  std::vector<TaggedHalfSpace> rows;
  if (k == n) {
    for (auto& [a, beta] : full_dim_facets(pts, n)) rows.push_back(canonicalize(std::move(a), beta, Tag::NonCap, "hull"));
  } else {
    if (k > 0) {
      std::vector<Vec> projected;
      for (const auto& p : pts) {
        Vec q(k);
        for (std::size_t j = 0; j < k; ++j) q[j] = p[dirs.pivots[j]];
        projected.push_back(std::move(q));
      }
      // Gram system for orthogonal projection onto the direction space.
      Matrix gram(k, zeros(k + 1));
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < k; ++c) gram[r][c] = dot(dirs.rows[r], dirs.rows[c]);
      for (auto& [aJ, beta] : full_dim_facets(projected, k)) {
        Vec a = zeros(n);
        for (std::size_t j = 0; j < k; ++j) a[dirs.pivots[j]] = aJ[j];
        Matrix sys = gram;
        for (std::size_t r = 0; r < k; ++r) sys[r][k] = dot(dirs.rows[r], a);
        const RowEchelon sol = rref(sys, k + 1);
        Vec proj = zeros(n);
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t c = 0; c < n; ++c) proj[c] += sol.rows[r][k] * dirs.rows[r][c];
        const Scalar shift = dot(sub(a, proj), p0);
        rows.push_back(canonicalize(std::move(proj), beta - shift, Tag::NonCap, "hull"));
      }
    }
    for (auto& e : nullspace(difference_vectors(pts), n)) {
      const Scalar level = dot(e, p0);
      rows.push_back(canonicalize(e, level, Tag::NonCap, "affine-hull"));
      rows.push_back(canonicalize(negate(e), -level, Tag::NonCap, "affine-hull"));
    }
  }

  TrackedPolytope P;
  P.dim = n;
  P.halfspaces = canonical_set(std::move(rows));
  for (const auto& p : pts) {
    Matrix tight;
    for (const auto& h : P.halfspaces)
      if (h.tight_at(p)) tight.push_back(h.normal);
    if (rank(tight, n) == n) P.vertices.push_back({p, Tag::NonCap, {}});
  }
  sort_vertices(P.vertices);
  P.underlying = P.halfspaces;
  P.rebuild_incidence();
  return P;
}

Face face_of(const TrackedPolytope& P, const Vec& u) {
  Face f;
  for (std::size_t i = 0; i < P.vertices.size(); ++i) {
    const Scalar value = dot(u, P.vertices[i].coords);
    if (f.vertex_ids.empty() || value > f.support) {
      f.support = value;
      f.vertex_ids.assign(1, i);
    } else if (value == f.support) {
      f.vertex_ids.push_back(i);
    }
  }
  std::vector<Vec> pts;
  for (auto i : f.vertex_ids) pts.push_back(P.vertices[i].coords);
  f.dim = affine_dimension(pts);
  return f;
}

Scalar support_value(const TrackedPolytope& P, const Vec& u) { return face_of(P, u).support; }

Scalar support_value_lp(const TrackedPolytope& P, const Vec& u) {
  const lp::Result r = lp::maximize(normals_of(P.halfspaces), offsets_of(P.halfspaces), u);
  if (r.status != lp::Status::Optimal) throw Error(ErrorKind::InvariantViolation, "polytope LP is not bounded");
  return r.value;
}

std::vector<TaggedHalfSpace> Box::halfspaces() const {
  std::vector<TaggedHalfSpace> rows;
  for (std::size_t i = 0; i < lower.size(); ++i) {
    rows.push_back(canonicalize(unit(lower.size(), i), upper[i], Tag::Cap, "box:axis" + std::to_string(i) + "+"));
    rows.push_back(
        canonicalize(negate(unit(lower.size(), i)), -lower[i], Tag::Cap, "box:axis" + std::to_string(i) + "-"));
  }
  return rows;
}

Box bounding_box(const std::vector<Vec>& points, const Scalar& delta) {
  if (sgn(delta) <= 0) throw Error(ErrorKind::NonPositiveMargin, "box margin must be > 0");
  if (points.empty()) throw Error(ErrorKind::EmptyPolytope, "bounding box of no points");
  Box box{points.front(), points.front(), delta};
  for (const auto& p : points) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < box.lower[i]) box.lower[i] = p[i];
      if (p[i] > box.upper[i]) box.upper[i] = p[i];
    }
  }
  for (auto& x : box.lower) x -= delta;
  for (auto& x : box.upper) x += delta;
  return box;
}

Inclusion includes(const TrackedPolytope& P, const std::vector<TaggedHalfSpace>& Q) {
  for (std::size_t v = 0; v < P.vertices.size(); ++v) {
    for (std::size_t q = 0; q < Q.size(); ++q) {
      if (!Q[q].contains(P.vertices[v].coords)) return {false, v, q};
    }
  }
  return {};
}

bool includes_polytope(const TrackedPolytope& outer, const TrackedPolytope& inner) {
  return includes(inner, outer.halfspaces).included;
}

TrackedPolytope negated(const TrackedPolytope& P) {
  TrackedPolytope R;
  R.dim = P.dim;
  for (const auto& h : P.halfspaces) R.halfspaces.push_back(canonicalize(negate(h.normal), h.offset, h.tag, h.provenance));
  for (const auto& h : P.underlying) R.underlying.push_back(canonicalize(negate(h.normal), h.offset, h.tag, h.provenance));
  std::sort(R.halfspaces.begin(), R.halfspaces.end(), canonical_less);
  std::sort(R.underlying.begin(), R.underlying.end(), canonical_less);
  for (const auto& v : P.vertices) R.vertices.push_back({negate(v.coords), v.tag, {}});
  sort_vertices(R.vertices);
  R.rebuild_incidence();
  return R;
}

std::vector<TaggedHalfSpace> rows_with_tag(const TrackedPolytope& P, Tag tag) {
  std::vector<TaggedHalfSpace> out;
  for (const auto& h : P.halfspaces)
    if (h.tag == tag) out.push_back(h);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace tolpoly
