#pragma once

#include "tolpoly/scalar.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tolpoly {

/// Whether a face derives from a real constraint (NonCap) or from an
/// artificial bound added to make a polyhedron bounded (Cap).
enum class Tag { NonCap, Cap };

std::string_view to_string(Tag tag);
Tag parse_tag(std::string_view text);

/// normal . x <= offset, with a cap tag and a free-form provenance label.
///
/// Values built through canonicalize() have a primitive integer normal; the
/// offset is scaled by the same positive factor, so two rows describing the
/// same half-space compare equal on (normal, offset).
struct TaggedHalfSpace {
  Vec normal;
  Scalar offset;
  Tag tag = Tag::NonCap;
  std::string provenance;

  bool contains(std::span<const Scalar> x) const { return dot(normal, x) <= offset; }
  bool tight_at(std::span<const Scalar> x) const { return dot(normal, x) == offset; }
  Scalar slack(std::span<const Scalar> x) const { return offset - dot(normal, x); }

  /// Same hyperplane and same side, ignoring tag and provenance.
  bool same_halfspace(const TaggedHalfSpace& other) const {
    return normal == other.normal && offset == other.offset;
  }
};

/// Throws Error(ZeroNormal) when normal == 0.
TaggedHalfSpace canonicalize(Vec normal, Scalar offset, Tag tag = Tag::NonCap, std::string provenance = {});
TaggedHalfSpace canonicalize(const TaggedHalfSpace& h);

/// Strict weak order on (normal, offset) used for every canonical listing.
bool canonical_less(const TaggedHalfSpace& a, const TaggedHalfSpace& b);

/// Canonicalizes, sorts and merges duplicates. A duplicate group is NonCap if
/// any member is NonCap; provenance of the kept member wins.
std::vector<TaggedHalfSpace> canonical_set(std::vector<TaggedHalfSpace> rows);

}  // namespace tolpoly
