#include "tolpoly/minkowski.hpp"

#include "tolpoly/error.hpp"
#include "tolpoly/lp.hpp"

#include <algorithm>
#include <map>

namespace tolpoly {

namespace {

std::vector<TaggedHalfSpace> noncap_rows(const TrackedPolytope& P) {
  std::vector<TaggedHalfSpace> rows;
  for (const auto& h : P.underlying)
    if (h.tag == Tag::NonCap) rows.push_back(h);
  return canonical_set(std::move(rows));
}

// Dimension of the polyhedron face where every row in `tight` holds with equality.
int polyhedron_face_dim(const std::vector<TaggedHalfSpace>& rows, const std::vector<bool>& tight, std::size_t n) {
  Matrix A;
  Vec b;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    A.push_back(rows[i].normal);
    b.push_back(rows[i].offset);
    if (tight[i]) {
      A.push_back(negate(rows[i].normal));
      b.push_back(-rows[i].offset);
    }
  }
  Matrix implicit;
  std::vector<bool> slack(rows.size(), false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (tight[i]) {
      implicit.push_back(rows[i].normal);
      continue;
    }
    if (slack[i]) continue;
    const lp::Result r = lp::maximize(A, b, negate(rows[i].normal));
    if (r.status == lp::Status::Optimal && r.value == -rows[i].offset) {
      implicit.push_back(rows[i].normal);
    } else if (r.status == lp::Status::Optimal) {
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (!rows[k].tight_at(r.x)) slack[k] = true;
    }
  }
  return static_cast<int>(n - rank(implicit, n));
}

Vec interior_normal(const TrackedPolytope& P, const std::vector<std::size_t>& face_vertices) {
  Vec u = zeros(P.dim);
  for (const auto& h : P.halfspaces) {
    bool on = true;
    for (auto v : face_vertices)
      if (!h.tight_at(P.vertices[v].coords)) on = false;
    if (on) u = add(u, h.normal);
  }
  return u;
}

}  // namespace

bool face_is_noncap(const TrackedPolytope& P, const std::vector<std::size_t>& face_vertices) {
  const auto rows = noncap_rows(P);
  std::vector<bool> tight(rows.size(), true);
  std::vector<Vec> pts;
  for (auto v : face_vertices) pts.push_back(P.vertices[v].coords);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& p : pts)
      if (!rows[i].tight_at(p)) tight[i] = false;
  return polyhedron_face_dim(rows, tight, P.dim) == affine_dimension(pts);
}

FaceDecomposition decompose_face(const TrackedPolytope& P3, const TrackedPolytope& P1, const TrackedPolytope& P2,
                                 const std::vector<std::size_t>& face_vertices) {
  const Vec u = interior_normal(P3, face_vertices);
  FaceDecomposition d{face_of(P1, u), face_of(P2, u), false};
  std::vector<Vec> expected, sums;
  for (auto v : face_vertices) expected.push_back(P3.vertices[v].coords);
  for (auto i : d.left.vertex_ids)
    for (auto j : d.right.vertex_ids) sums.push_back(add(P1.vertices[i].coords, P2.vertices[j].coords));
  const Scalar level = dot(u, expected.front());
  bool ok = std::all_of(sums.begin(), sums.end(), [&](const Vec& s) { return dot(u, s) == level; });
  for (const auto& e : expected)
    if (std::find(sums.begin(), sums.end(), e) == sums.end()) ok = false;
  // the face's vertices must be all the extreme points of the pairwise sums
  if (ok) {
    const auto hull = v_to_h(sums, P3.dim);
    auto got = hull.vertex_coords();
    std::sort(expected.begin(), expected.end());
    ok = got == expected;
  }
  d.verified = ok;
  return d;
}

std::pair<TrackedPolytope, SumCertificate> minkowski_sum(const TrackedPolytope& P1, const TrackedPolytope& P2) {
  if (P1.dim != P2.dim) throw Error(ErrorKind::DimMismatch, "Minkowski sum of polytopes in different dimensions");
  const std::size_t n = P1.dim;

  std::vector<PolyhedralCone> c1, c2;
  for (std::size_t i = 0; i < P1.vertices.size(); ++i) c1.push_back(dual_cone(P1, i));
  for (std::size_t j = 0; j < P2.vertices.size(); ++j) c2.push_back(dual_cone(P2, j));

  std::map<Vec, VertexPair> candidates;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    for (std::size_t j = 0; j < c2.size(); ++j) {
      if (!cones_meet_full(c1[i], c2[j])) continue;
      Vec p = add(P1.vertices[i].coords, P2.vertices[j].coords);
      if (!candidates.emplace(std::move(p), VertexPair{i, j}).second)
        throw Error(ErrorKind::InvariantViolation, "two vertex pairs give the same sum vertex");
    }
  }
  std::vector<Vec> points;
  for (const auto& [p, pair] : candidates) points.push_back(p);

  TrackedPolytope P3 = v_to_h(points, n);
  if (P3.vertices.size() != points.size())
    throw Error(ErrorKind::InvariantViolation, "a certified pair sum is not a vertex of the hull");

  SumCertificate cert;
  for (auto& v : P3.vertices) {
    const VertexPair& pair = candidates.at(v.coords);
    cert.pairs.push_back(pair);
    v.tag = (P1.vertices[pair.left].tag == Tag::NonCap && P2.vertices[pair.right].tag == Tag::NonCap) ? Tag::NonCap
                                                                                                        : Tag::Cap;
  }

  // In a k-dimensional sum every normal cone contains the (n-k)-dimensional
  // complement of the affine hull, so a relative facet's refinement cone has
  // dimension n-k+1 and an equality row's has n-k. For k = n this is the ray test.
  const NormalFanView f1 = polyhedron_fan(P1), f2 = polyhedron_fan(P2);
  const int codim = static_cast<int>(n) - P3.affine_dim();
  const std::vector<bool> equality = P3.equality_mask();
  P3.underlying.clear();
  for (std::size_t h = 0; h < P3.halfspaces.size(); ++h) {
    auto& row = P3.halfspaces[h];
    RefinementTest t = refinement_test(row.normal, f1, f2);
    t.ray = t.dim >= 0 && t.dim == codim + (equality[h] ? 0 : 1);
    row.tag = t.ray ? Tag::NonCap : Tag::Cap;
    row.provenance = "sum";
    cert.facets.push_back({row.normal, row.offset, row.tag, t.transcript()});
    if (row.tag == Tag::NonCap) P3.underlying.push_back(row);

    const FaceDecomposition d = decompose_face(P3, P1, P2, P3.incidence[h]);
    const Tag by_faces = (face_is_noncap(P1, d.left.vertex_ids) && face_is_noncap(P2, d.right.vertex_ids))
                             ? Tag::NonCap
                             : Tag::Cap;
    if (by_faces != row.tag) cert.disagreements.push_back({h, by_faces, row.tag});
  }
  return {std::move(P3), std::move(cert)};
}

}  // namespace tolpoly
