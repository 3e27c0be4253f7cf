#pragma once

#include "tolpoly/polytope.hpp"

#include <optional>

namespace tolpoly {

struct IntersectionReport {
  TrackedPolytope result;
  Box box;
  std::vector<std::size_t> box_facets;  // result half-spaces lying on box hyperplanes
  bool naive_differs = false;           // plain intersection of the tagged operands differs
};

/// max(largest extent of the points' bounding box / 10, 1).
Scalar default_margin(const std::vector<Vec>& points);

/// Intersection of the operands' NonCap polyhedra, closed by a Cap box that
/// circumscribes all operand vertices with margin delta (default_margin when
/// omitted). Throws EmptyPolytope, NonPositiveMargin, DimMismatch, and
/// InvariantViolation if a box row coincides with a NonCap row.
IntersectionReport capped_intersection(const std::vector<TrackedPolytope>& operands,
                                       std::optional<Scalar> delta = std::nullopt);

/// Plain intersection of every half-space of every operand, tags kept.
TrackedPolytope naive_tagged_intersection(const std::vector<TrackedPolytope>& operands);

}  // namespace tolpoly
