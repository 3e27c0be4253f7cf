#pragma once

#include "tolpoly/polytope.hpp"

#include <optional>
#include <string>

namespace tolpoly {

/// A closed polyhedral cone in R^n. `generators` always describes it; `hform`
/// (rows h with h.u <= 0) is present only when `has_hform` is set.
struct PolyhedralCone {
  std::size_t ambient = 0;
  std::vector<Vec> generators;  // primitive, sorted, unique
  Matrix hform;
  bool has_hform = false;
  int dim = 0;

  bool contains(const Vec& u) const;
};

PolyhedralCone cone_from_generators(std::vector<Vec> generators, std::size_t n);

/// Maximal cones of a normal fan plus the inequality system it was taken
/// from, which answers smallest-cone queries.
struct NormalFanView {
  std::size_t dim = 0;
  std::vector<PolyhedralCone> cones;
  std::vector<TaggedHalfSpace> rows;
  bool complete = false;
};

/// Normal cone at vertex `v` (index into P.vertices). Throws NotAVertex.
PolyhedralCone dual_cone(const TrackedPolytope& P, std::size_t v);
/// Same, looked up by coordinates.
PolyhedralCone dual_cone(const TrackedPolytope& P, const Vec& v);

/// Complete fan: one dual cone per vertex.
NormalFanView polytope_fan(const TrackedPolytope& P);

/// Fan of the polyhedron cut out by the NonCap rows of P alone.
NormalFanView polyhedron_fan(const TrackedPolytope& P);

/// Fan of an arbitrary feasible inequality system.
NormalFanView fan_of_rows(std::vector<TaggedHalfSpace> rows, std::size_t n);

/// The cone of `fan` containing u in its relative interior, i.e. the normal
/// cone of the face maximizing u. nullopt when u is outside the fan's support.
std::optional<PolyhedralCone> smallest_cone(const NormalFanView& fan, const Vec& u);

/// dim(C1 cap C2). Uses the H-forms when both cones carry one.
int cone_intersection_dim(const PolyhedralCone& a, const PolyhedralCone& b);
int cone_intersection_dim_hform(const PolyhedralCone& a, const PolyhedralCone& b);
int cone_intersection_dim_generators(const PolyhedralCone& a, const PolyhedralCone& b);

/// Whether {u : H u < 0} is nonempty for the stacked H-forms, i.e. the two
/// cones meet in dimension n. Both cones need an H-form.
bool cones_meet_full(const PolyhedralCone& a, const PolyhedralCone& b);

/// Outcome of the refinement-ray test, kept for certificates.
struct RefinementTest {
  std::optional<PolyhedralCone> cone_a;  // smallest cone of fanA holding u
  std::optional<PolyhedralCone> cone_b;
  int dim = -1;  // dim(cone_a cap cone_b), -1 when u is outside a support
  bool ray = false;

  std::string transcript() const;
};

RefinementTest refinement_test(const Vec& u, const NormalFanView& fanA, const NormalFanView& fanB);

/// u spans a 1-dimensional cone of the common refinement fanA ^ fanB. A
/// line (both u and -u) counts: that is an equality of the polyhedron sum.
bool is_refinement_ray(const Vec& u, const NormalFanView& fanA, const NormalFanView& fanB);

}  // namespace tolpoly
