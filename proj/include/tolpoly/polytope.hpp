#pragma once

#include "tolpoly/halfspace.hpp"
#include "tolpoly/linalg.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace tolpoly {

struct TaggedVertex {
  Vec coords;
  Tag tag = Tag::NonCap;
  std::vector<std::size_t> tight;  // indices into TrackedPolytope::halfspaces
};

/// A bounded polytope held in double description, with cap tags.
///
/// `halfspaces` is irredundant and canonical; a lower-dimensional polytope
/// carries its affine hull as opposing half-space pairs. `underlying` is the
/// H-description of the polyhedron obtained by dropping cap bounds; it always
/// contains every NonCap row of `halfspaces` and may keep NonCap rows that
/// are redundant for the polytope itself.
struct TrackedPolytope {
  std::size_t dim = 0;
  std::vector<TaggedHalfSpace> halfspaces;
  std::vector<TaggedVertex> vertices;
  std::vector<std::vector<std::size_t>> incidence;  // half-space -> tight vertex ids
  std::vector<TaggedHalfSpace> underlying;

  std::vector<Vec> vertex_coords() const;
  int affine_dim() const;
  std::size_t count(Tag tag) const;  // half-spaces carrying `tag`

  /// Indices of half-spaces whose opposite is also present (equality pairs).
  std::vector<bool> equality_mask() const;

  /// Recomputes `tight` and `incidence` from the current rows and vertices.
  void rebuild_incidence();
};

/// Canonical primitive-integer form of a raw inequality.
TaggedHalfSpace canonicalize_halfspace(Vec normal, Scalar offset, Tag tag = Tag::NonCap, std::string provenance = {});

/// Irredundant canonical sublist. Rows are canonicalized, merged (NonCap wins
/// over Cap on duplicates), sorted, then dropped one at a time whenever an
/// exact LP shows the remaining rows already imply them.
/// Throws Error(EmptyPolytope) for an infeasible system.
std::vector<TaggedHalfSpace> remove_redundant(std::vector<TaggedHalfSpace> rows, std::size_t n);

/// Vertex enumeration. Vertex tags default to NonCap exactly when every tight
/// half-space is NonCap. Throws EmptyPolytope or UnboundedInput.
TrackedPolytope h_to_v(std::vector<TaggedHalfSpace> rows, std::size_t n);

/// Facet enumeration of conv(points). Lower-dimensional hulls get one
/// opposing pair per affine-hull equation; their facet normals are projected
/// onto the hull's direction space so the description is canonical.
/// Every half-space is NonCap; the vertex list keeps only extreme points.
TrackedPolytope v_to_h(const std::vector<Vec>& points, std::size_t n);

struct Face {
  std::vector<std::size_t> vertex_ids;
  int dim = -1;
  Scalar support;
};

/// argmax-vertices of u.x over P and the affine dimension of their hull.
Face face_of(const TrackedPolytope& P, const Vec& u);

Scalar support_value(const TrackedPolytope& P, const Vec& u);

/// support via the H-description and an LP, independent of the vertex list.
Scalar support_value_lp(const TrackedPolytope& P, const Vec& u);

struct Box {
  Vec lower;
  Vec upper;
  Scalar margin;

  /// x_i <= upper_i ("box:axis<i>+") and -x_i <= -lower_i ("box:axis<i>-"), all Cap.
  std::vector<TaggedHalfSpace> halfspaces() const;
};

/// Per-axis [min - delta, max + delta]. Throws NonPositiveMargin for delta <= 0.
Box bounding_box(const std::vector<Vec>& points, const Scalar& delta);

struct Inclusion {
  bool included = true;
  std::optional<std::size_t> witness_vertex;     // into P.vertices
  std::optional<std::size_t> violated_halfspace;  // into Q
};

/// P subset Q, checked vertex by vertex.
Inclusion includes(const TrackedPolytope& P, const std::vector<TaggedHalfSpace>& Q);
bool includes_polytope(const TrackedPolytope& outer, const TrackedPolytope& inner);

/// Point reflection x -> -x with tags kept.
TrackedPolytope negated(const TrackedPolytope& P);

/// Canonical (normal, offset) rows of the given tag, sorted.
std::vector<TaggedHalfSpace> rows_with_tag(const TrackedPolytope& P, Tag tag);

}  // namespace tolpoly
