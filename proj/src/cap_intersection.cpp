#include "tolpoly/cap_intersection.hpp"

#include "tolpoly/error.hpp"

#include <algorithm>

namespace tolpoly {

namespace {

std::size_t common_dim(const std::vector<TrackedPolytope>& operands) {
  if (operands.size() < 2) throw Error(ErrorKind::SchemaError, "intersection needs at least two operands");
  for (const auto& P : operands)
    if (P.dim != operands.front().dim) throw Error(ErrorKind::DimMismatch, "intersection operands differ in dimension");
  return operands.front().dim;
}

}  // namespace

Scalar default_margin(const std::vector<Vec>& points) {
  const Box tight = bounding_box(points, 1);
  Scalar edge = 0;
  for (std::size_t i = 0; i < tight.lower.size(); ++i) edge = std::max(edge, Scalar(tight.upper[i] - tight.lower[i] - 2));
  const Scalar m = edge / 10;
  return m > 1 ? m : Scalar(1);
}

IntersectionReport capped_intersection(const std::vector<TrackedPolytope>& operands, std::optional<Scalar> delta) {
  const std::size_t n = common_dim(operands);
  std::vector<Vec> points;
  std::vector<TaggedHalfSpace> rows;
  for (const auto& P : operands) {
    for (const auto& v : P.vertices) points.push_back(v.coords);
    for (const auto& h : P.underlying)
      if (h.tag == Tag::NonCap) rows.push_back(h);
  }
  rows = canonical_set(std::move(rows));

  IntersectionReport rep;
  rep.box = bounding_box(points, delta ? *delta : default_margin(points));
  const auto box_rows = rep.box.halfspaces();
  for (const auto& b : box_rows)
    for (const auto& r : rows)
      if (b.same_halfspace(r))
        throw Error(ErrorKind::InvariantViolation, "box row " + b.provenance + " coincides with a NonCap row");

  std::vector<TaggedHalfSpace> all = rows;
  all.insert(all.end(), box_rows.begin(), box_rows.end());
  rep.result = h_to_v(std::move(all), n);

  for (std::size_t h = 0; h < rep.result.halfspaces.size(); ++h)
    if (rep.result.halfspaces[h].tag == Tag::Cap) rep.box_facets.push_back(h);
  for (auto& v : rep.result.vertices) {
    v.tag = Tag::NonCap;
    for (const auto& b : box_rows)
      if (b.tight_at(v.coords)) v.tag = Tag::Cap;
  }

  try {
    rep.naive_differs = naive_tagged_intersection(operands).vertex_coords() != rep.result.vertex_coords();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::EmptyPolytope) throw;
    rep.naive_differs = true;
  }
  return rep;
}

TrackedPolytope naive_tagged_intersection(const std::vector<TrackedPolytope>& operands) {
  const std::size_t n = common_dim(operands);
  std::vector<TaggedHalfSpace> rows;
  for (const auto& P : operands) rows.insert(rows.end(), P.halfspaces.begin(), P.halfspaces.end());
  return h_to_v(std::move(rows), n);
}

}  // namespace tolpoly
