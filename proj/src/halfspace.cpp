#include "tolpoly/halfspace.hpp"

#include "tolpoly/error.hpp"

#include <algorithm>

namespace tolpoly {

std::string_view to_string(Tag tag) { return tag == Tag::Cap ? "cap" : "noncap"; }

Tag parse_tag(std::string_view text) {
  if (text == "cap") return Tag::Cap;
  if (text == "noncap") return Tag::NonCap;
  throw std::invalid_argument("unknown tag '" + std::string(text) + "'");
}

TaggedHalfSpace canonicalize(Vec normal, Scalar offset, Tag tag, std::string provenance) {
  if (is_zero(normal)) throw Error(ErrorKind::ZeroNormal, "half-space with zero normal");
  const Scalar f = primitive_factor(normal);
  for (auto& x : normal) x *= f;
  offset *= f;
  return {std::move(normal), std::move(offset), tag, std::move(provenance)};
}

TaggedHalfSpace canonicalize(const TaggedHalfSpace& h) {
  return canonicalize(h.normal, h.offset, h.tag, h.provenance);
}

bool canonical_less(const TaggedHalfSpace& a, const TaggedHalfSpace& b) {
  if (a.normal != b.normal) return a.normal < b.normal;
  return a.offset < b.offset;
}

std::vector<TaggedHalfSpace> canonical_set(std::vector<TaggedHalfSpace> rows) {
  for (auto& r : rows) r = canonicalize(r);
  // NonCap first within a duplicate group so it is the member that survives.
  std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (canonical_less(a, b)) return true;
    if (canonical_less(b, a)) return false;
    return a.tag == Tag::NonCap && b.tag == Tag::Cap;
  });
  std::vector<TaggedHalfSpace> out;
  for (auto& r : rows) {
    if (!out.empty() && out.back().same_halfspace(r)) continue;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tolpoly
