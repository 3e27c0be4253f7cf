#pragma once

#include "tolpoly/normal_fan.hpp"

#include <string>
#include <utility>

namespace tolpoly {

struct VertexPair {
  std::size_t left = 0;   // into P1.vertices
  std::size_t right = 0;  // into P2.vertices
};

struct FacetVerdict {
  Vec normal;
  Scalar offset;
  Tag tag = Tag::Cap;
  std::string transcript;
};

/// A facet where the face-decomposition rule and the refinement-ray rule
/// disagree. The refinement-ray verdict is the one applied.
struct TagDisagreement {
  std::size_t facet = 0;
  Tag by_decomposition = Tag::Cap;
  Tag by_refinement = Tag::Cap;
};

struct SumCertificate {
  std::vector<VertexPair> pairs;      // parallel to result.vertices
  std::vector<FacetVerdict> facets;   // parallel to result.halfspaces
  std::vector<TagDisagreement> disagreements;
};

/// P1 (+) P2 with tracked tags. Throws DimMismatch.
std::pair<TrackedPolytope, SumCertificate> minkowski_sum(const TrackedPolytope& P1, const TrackedPolytope& P2);

struct FaceDecomposition {
  Face left;
  Face right;
  bool verified = false;  // left (+) right has exactly the face's vertices
};

/// Unique decomposition of the face of P3 spanned by `face_vertices`.
FaceDecomposition decompose_face(const TrackedPolytope& P3, const TrackedPolytope& P1, const TrackedPolytope& P2,
                                 const std::vector<std::size_t>& face_vertices);

/// Whether the face of P on `face_vertices` lies in a face of the same
/// dimension of P's NonCap polyhedron.
bool face_is_noncap(const TrackedPolytope& P, const std::vector<std::size_t>& face_vertices);

}  // namespace tolpoly
