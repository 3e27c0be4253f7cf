#include "tolpoly/normal_fan.hpp"

#include "tolpoly/double_description.hpp"
#include "tolpoly/error.hpp"
#include "tolpoly/lp.hpp"

#include <algorithm>

namespace tolpoly {

namespace {

std::vector<Vec> primitive_unique(std::vector<Vec> vs) {
  std::vector<Vec> out;
  for (auto& v : vs)
    if (!is_zero(v)) out.push_back(primitive(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Rows of {z : E z = 0, 0 <= z <= 1}.
void equality_box(const Matrix& E, std::size_t m, Matrix& A, Vec& b) {
  for (const auto& e : E) {
    A.push_back(e);
    b.push_back(0);
    A.push_back(negate(e));
    b.push_back(0);
  }
  for (std::size_t k = 0; k < m; ++k) {
    A.push_back(negate(unit(m, k)));
    b.push_back(0);
    A.push_back(unit(m, k));
    b.push_back(1);
  }
}

}  // namespace

bool PolyhedralCone::contains(const Vec& u) const {
  if (has_hform) {
    for (const auto& h : hform)
      if (sgn(dot(h, u)) > 0) return false;
    return true;
  }
  const std::size_t m = generators.size();
  if (m == 0) return is_zero(u);
  // u = sum lambda_k g_k, lambda >= 0
  Matrix A;
  Vec b;
  for (std::size_t c = 0; c < ambient; ++c) {
    Vec row(m);
    for (std::size_t k = 0; k < m; ++k) row[k] = generators[k][c];
    A.push_back(row);
    b.push_back(u[c]);
    A.push_back(negate(row));
    b.push_back(-u[c]);
  }
  for (std::size_t k = 0; k < m; ++k) {
    A.push_back(negate(unit(m, k)));
    b.push_back(0);
  }
  return lp::feasible(A, b, m);
}

PolyhedralCone cone_from_generators(std::vector<Vec> generators, std::size_t n) {
  PolyhedralCone c;
  c.ambient = n;
  c.generators = primitive_unique(std::move(generators));
  c.dim = static_cast<int>(rank(c.generators, n));
  return c;
}

PolyhedralCone dual_cone(const TrackedPolytope& P, std::size_t v) {
  if (v >= P.vertices.size()) throw Error(ErrorKind::NotAVertex, "vertex index out of range");
  std::vector<Vec> gens;
  for (std::size_t h = 0; h < P.halfspaces.size(); ++h)
    if (P.halfspaces[h].tight_at(P.vertices[v].coords)) gens.push_back(P.halfspaces[h].normal);
  PolyhedralCone c = cone_from_generators(std::move(gens), P.dim);
  std::vector<Vec> rows;
  for (std::size_t w = 0; w < P.vertices.size(); ++w)
    if (w != v) rows.push_back(sub(P.vertices[w].coords, P.vertices[v].coords));
  c.hform = primitive_unique(std::move(rows));
  c.has_hform = true;
  return c;
}

PolyhedralCone dual_cone(const TrackedPolytope& P, const Vec& v) {
  for (std::size_t i = 0; i < P.vertices.size(); ++i)
    if (P.vertices[i].coords == v) return dual_cone(P, i);
  throw Error(ErrorKind::NotAVertex, "point " + to_string(v) + " is not a vertex");
}

NormalFanView polytope_fan(const TrackedPolytope& P) {
  NormalFanView fan;
  fan.dim = P.dim;
  fan.rows = P.halfspaces;
  fan.complete = true;
  for (std::size_t v = 0; v < P.vertices.size(); ++v) fan.cones.push_back(dual_cone(P, v));
  return fan;
}

NormalFanView fan_of_rows(std::vector<TaggedHalfSpace> rows, std::size_t n) {
  NormalFanView fan;
  fan.dim = n;
  fan.rows = canonical_set(std::move(rows));
  Matrix A;
  for (const auto& r : fan.rows) A.push_back(r.normal);

  fan.complete = !fan.rows.empty();
  const Vec origin_b = zeros(A.size());
  for (std::size_t i = 0; i < n && fan.complete; ++i) {
    for (int s : {1, -1}) {
      if (lp::maximize(A, origin_b, scale(unit(n, i), s)).status != lp::Status::Optimal) fan.complete = false;
    }
  }

  // Minimal faces are translates of the lineality space L; their normal
  // cones are the maximal cones. Pick one point per face inside L-perp.
  Matrix G;
  for (const auto& r : fan.rows) {
    Vec g = r.normal;
    g.push_back(-r.offset);
    G.push_back(std::move(g));
  }
  for (const auto& l : nullspace(A, n)) {
    Vec g = l;
    g.push_back(0);
    G.push_back(g);
    G.push_back(negate(g));
  }
  Vec t_row = zeros(n + 1);
  t_row[n] = -1;
  G.push_back(std::move(t_row));

  for (const auto& ray : extreme_rays(G, n + 1)) {
    if (sgn(ray[n]) <= 0) continue;
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = ray[i] / ray[n];
    std::vector<Vec> gens;
    for (const auto& r : fan.rows)
      if (r.tight_at(x)) gens.push_back(r.normal);
    PolyhedralCone c = cone_from_generators(std::move(gens), n);
    const bool dup = std::any_of(fan.cones.begin(), fan.cones.end(),
                                 [&](const auto& other) { return other.generators == c.generators; });
    if (!dup) fan.cones.push_back(std::move(c));
  }
  return fan;
}

NormalFanView polyhedron_fan(const TrackedPolytope& P) {
  std::vector<TaggedHalfSpace> rows;
  for (const auto& h : P.underlying)
    if (h.tag == Tag::NonCap) rows.push_back(h);
  return fan_of_rows(std::move(rows), P.dim);
}

std::optional<PolyhedralCone> smallest_cone(const NormalFanView& fan, const Vec& u) {
  const std::size_t n = fan.dim;
  Matrix A;
  Vec b;
  for (const auto& r : fan.rows) {
    A.push_back(r.normal);
    b.push_back(r.offset);
  }
  const lp::Result best = lp::maximize(A, b, u);
  if (best.status == lp::Status::Unbounded) return std::nullopt;
  if (best.status != lp::Status::Optimal) throw Error(ErrorKind::EmptyPolytope, "fan of an empty system");

  // Rows tight on the whole optimal face generate its normal cone.
  Matrix FA = A;
  Vec Fb = b;
  FA.push_back(negate(u));
  Fb.push_back(-best.value);
  std::vector<int> state(fan.rows.size(), 0);  // 0 unknown, -1 slack somewhere
  auto mark = [&](const Vec& x) {
    for (std::size_t i = 0; i < fan.rows.size(); ++i)
      if (!fan.rows[i].tight_at(x)) state[i] = -1;
  };
  mark(best.x);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < fan.rows.size(); ++i) {
    if (state[i] != 0) continue;
    const lp::Result r = lp::maximize(FA, Fb, negate(fan.rows[i].normal));
    if (r.status == lp::Status::Optimal) {
      if (r.value == -fan.rows[i].offset) {
        gens.push_back(fan.rows[i].normal);
        state[i] = 1;
      } else {
        mark(r.x);
      }
    } else {
      state[i] = -1;
    }
  }
  return cone_from_generators(std::move(gens), n);
}

int cone_intersection_dim_hform(const PolyhedralCone& a, const PolyhedralCone& b) {
  const std::size_t n = a.ambient;
  Matrix H = a.hform;
  H.insert(H.end(), b.hform.begin(), b.hform.end());
  if (H.empty()) return static_cast<int>(n);
  std::vector<bool> strict(H.size(), false);
  auto mark = [&](const Vec& u) {
    for (std::size_t i = 0; i < H.size(); ++i)
      if (sgn(dot(H[i], u)) < 0) strict[i] = true;
  };
  Matrix implicit;
  for (std::size_t i = 0; i < H.size(); ++i) {
    if (strict[i]) continue;
    Matrix A = H;
    Vec rhs = zeros(H.size());
    A.push_back(negate(H[i]));
    rhs.push_back(1);
    const lp::Result r = lp::maximize(A, rhs, negate(H[i]));
    if (r.status == lp::Status::Optimal && sgn(r.value) > 0) {
      mark(r.x);
    } else {
      implicit.push_back(H[i]);
    }
  }
  return static_cast<int>(n - rank(implicit, n));
}

int cone_intersection_dim_generators(const PolyhedralCone& a, const PolyhedralCone& b) {
  const std::size_t n = a.ambient;
  const std::size_t m1 = a.generators.size(), m2 = b.generators.size(), m = m1 + m2;
  if (m1 == 0 || m2 == 0) return 0;
  // z = (lambda, mu) >= 0 with G1^T lambda = G2^T mu.
  Matrix E(n, zeros(m));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < m1; ++k) E[c][k] = a.generators[k][c];
    for (std::size_t k = 0; k < m2; ++k) E[c][m1 + k] = -b.generators[k][c];
  }
  Matrix A;
  Vec rhs;
  equality_box(E, m, A, rhs);
  std::vector<bool> positive(m, false);
  Matrix span_rows = E;
  for (std::size_t k = 0; k < m; ++k) {
    if (positive[k]) continue;
    const lp::Result r = lp::maximize(A, rhs, unit(m, k));
    if (r.status == lp::Status::Optimal && sgn(r.value) > 0) {
      for (std::size_t j = 0; j < m; ++j)
        if (sgn(r.x[j]) > 0) positive[j] = true;
    } else {
      span_rows.push_back(unit(m, k));
    }
  }
  Matrix image;
  for (const auto& z : nullspace(span_rows, m)) {
    Vec u = zeros(n);
    for (std::size_t k = 0; k < m1; ++k)
      for (std::size_t c = 0; c < n; ++c) u[c] += z[k] * a.generators[k][c];
    image.push_back(std::move(u));
  }
  return static_cast<int>(rank(image, n));
}

int cone_intersection_dim(const PolyhedralCone& a, const PolyhedralCone& b) {
  if (a.ambient != b.ambient) throw Error(ErrorKind::DimMismatch, "cones in different dimensions");
  if (a.has_hform && b.has_hform) return cone_intersection_dim_hform(a, b);
  return cone_intersection_dim_generators(a, b);
}

bool cones_meet_full(const PolyhedralCone& a, const PolyhedralCone& b) {
  const std::size_t n = a.ambient;
  Matrix A;
  Vec rhs;
  for (const auto* c : {&a, &b}) {
    for (const auto& h : c->hform) {
      Vec row = h;
      row.push_back(1);
      A.push_back(std::move(row));
      rhs.push_back(0);
    }
  }
  A.push_back(unit(n + 1, n));
  rhs.push_back(1);
  const lp::Result r = lp::maximize(A, rhs, unit(n + 1, n));
  return r.status == lp::Status::Optimal && sgn(r.value) > 0;
}

std::string RefinementTest::transcript() const {
  auto describe = [](const std::optional<PolyhedralCone>& c) -> std::string {
    if (!c) return "outside support";
    std::string out = "cone{";
    for (std::size_t k = 0; k < c->generators.size(); ++k) {
      if (k) out += ",";
      out += to_string(c->generators[k]);
    }
    return out + "} dim " + std::to_string(c->dim);
  };
  std::string out = "left " + describe(cone_a) + "; right " + describe(cone_b);
  if (dim >= 0) out += "; meet dim " + std::to_string(dim);
  return out + (ray ? "; refinement ray" : "; not a refinement ray");
}

RefinementTest refinement_test(const Vec& u, const NormalFanView& fanA, const NormalFanView& fanB) {
  RefinementTest t;
  if (is_zero(u)) return t;
  t.cone_a = smallest_cone(fanA, u);
  t.cone_b = smallest_cone(fanB, u);
  if (!t.cone_a || !t.cone_b) return t;
  t.dim = cone_intersection_dim_generators(*t.cone_a, *t.cone_b);
  t.ray = t.dim == 1;
  return t;
}

bool is_refinement_ray(const Vec& u, const NormalFanView& fanA, const NormalFanView& fanB) {
  return refinement_test(u, fanA, fanB).ray;
}

}  // namespace tolpoly
