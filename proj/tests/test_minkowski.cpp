#include "tolpoly/error.hpp"
#include "tolpoly/minkowski.hpp"

#include "random_polytopes.hpp"

#include <gtest/gtest.h>

using namespace tolpoly;

namespace {

std::vector<Vec> pairwise_hull(const TrackedPolytope& P, const TrackedPolytope& Q) {
  std::vector<Vec> pts;
  for (const auto& p : P.vertices)
    for (const auto& q : Q.vertices) pts.push_back(add(p.coords, q.coords));
  return v_to_h(pts, P.dim).vertex_coords();
}

using Row = std::tuple<Vec, Scalar, Tag>;
std::vector<Row> tagged_rows(const TrackedPolytope& P) {
  std::vector<Row> out;
  for (const auto& h : P.halfspaces) out.emplace_back(h.normal, h.offset, h.tag);
  return out;
}

std::vector<std::pair<Vec, Scalar>> noncap_set(const TrackedPolytope& P) {
  std::vector<std::pair<Vec, Scalar>> out;
  for (const auto& h : rows_with_tag(P, Tag::NonCap)) out.emplace_back(h.normal, h.offset);
  return out;
}

TrackedPolytope quadrilateral() { return v_to_h({{-1, -1}, {1, -2}, {2, 1}, {-2, 1}}, 2); }

TrackedPolytope strip(int cap) {
  return h_to_v({canonicalize(Vec{0, 1}, 1), canonicalize(Vec{0, -1}, 1), canonicalize(Vec{1, 0}, cap, Tag::Cap),
                 canonicalize(Vec{-1, 0}, cap, Tag::Cap)},
                2);
}

}  // namespace

TEST(Minkowski, OracleEquivalenceAndSupport) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto P = gen::random_tagged(rng, n, 7);
    auto Q = gen::random_tagged(rng, n, 7);
    auto [S, cert] = minkowski_sum(P, Q);
    EXPECT_EQ(S.vertex_coords(), pairwise_hull(P, Q));
    ASSERT_EQ(cert.pairs.size(), S.vertices.size());
    for (std::size_t k = 0; k < S.vertices.size(); ++k) {
      const auto& pr = cert.pairs[k];
      EXPECT_EQ(S.vertices[k].coords, add(P.vertices[pr.left].coords, Q.vertices[pr.right].coords));
      const bool noncap = P.vertices[pr.left].tag == Tag::NonCap && Q.vertices[pr.right].tag == Tag::NonCap;
      EXPECT_EQ(S.vertices[k].tag == Tag::NonCap, noncap);
      EXPECT_EQ(cone_intersection_dim(dual_cone(P, pr.left), dual_cone(Q, pr.right)), static_cast<int>(n));
    }
    for (int s = 0; s < 20; ++s) {
      Vec u = oracle::random_point(rng, n, -6, 6);
      EXPECT_EQ(support_value(S, u), support_value(P, u) + support_value(Q, u));
    }
    // every facet decomposes into operand faces
    for (std::size_t h = 0; h < S.halfspaces.size(); ++h)
      EXPECT_TRUE(decompose_face(S, P, Q, S.incidence[h]).verified);
  }
}

TEST(Minkowski, CommutativeAndAssociative) {
  std::mt19937 rng(2);
  for (int trial = 0; trial < 4; ++trial) {
    auto A = gen::random_tagged(rng, 2, 5);
    auto B = gen::random_tagged(rng, 2, 5);
    auto C = gen::random_tagged(rng, 2, 5);
    auto AB = minkowski_sum(A, B).first;
    EXPECT_EQ(tagged_rows(AB), tagged_rows(minkowski_sum(B, A).first));
    auto left = minkowski_sum(AB, C).first;
    auto right = minkowski_sum(A, minkowski_sum(B, C).first).first;
    EXPECT_EQ(tagged_rows(left), tagged_rows(right));
  }
}

TEST(Minkowski, OriginIsNeutral) {
  std::mt19937 rng(4);
  auto P = gen::random_tagged(rng, 3, 8);
  auto O = v_to_h({{0, 0, 0}}, 3);
  auto [S, cert] = minkowski_sum(P, O);
  EXPECT_EQ(tagged_rows(S), tagged_rows(P));
  for (std::size_t k = 0; k < S.vertices.size(); ++k) EXPECT_EQ(S.vertices[k].tag, P.vertices[k].tag);
  auto d = decompose_face(S, P, O, {0});
  EXPECT_EQ(d.left.vertex_ids, std::vector<std::size_t>{0});
  EXPECT_EQ(d.right.vertex_ids, std::vector<std::size_t>{0});
}

TEST(Minkowski, SelfSumIsHomothety) {
  auto P = strip(5);
  auto S = minkowski_sum(P, P).first;
  ASSERT_EQ(S.halfspaces.size(), P.halfspaces.size());
  for (std::size_t i = 0; i < S.halfspaces.size(); ++i) {
    EXPECT_EQ(S.halfspaces[i].normal, P.halfspaces[i].normal);
    EXPECT_EQ(S.halfspaces[i].offset, 2 * P.halfspaces[i].offset);
    EXPECT_EQ(S.halfspaces[i].tag, P.halfspaces[i].tag);
  }
}

TEST(Minkowski, QuadrilateralPlusStrip) {
  auto P1 = quadrilateral();
  auto P2 = strip(5);
  for (const auto& v : P1.vertices) EXPECT_EQ(v.tag, Tag::NonCap);
  for (const auto& v : P2.vertices) EXPECT_EQ(v.tag, Tag::Cap);
  auto [S, cert] = minkowski_sum(P1, P2);
  EXPECT_TRUE(cert.disagreements.empty());
  for (const auto& h : S.halfspaces) {
    const bool horizontal = h.normal == Vec{0, 1} || h.normal == Vec{0, -1};
    EXPECT_EQ(h.tag, horizontal ? Tag::NonCap : Tag::Cap) << to_string(h.normal);
  }
  for (const auto& v : S.vertices) EXPECT_EQ(v.tag, Tag::Cap);
  // edge (+) edge is NonCap, edge (+) cap vertex is Cap
  for (std::size_t h = 0; h < S.halfspaces.size(); ++h) {
    auto d = decompose_face(S, P1, P2, S.incidence[h]);
    if (d.left.dim == 1 && d.right.dim == 1) EXPECT_EQ(S.halfspaces[h].tag, Tag::NonCap);
    if (d.left.dim == 1 && d.right.dim == 0) EXPECT_EQ(S.halfspaces[h].tag, Tag::Cap);
  }
}

TEST(Minkowski, CapScalingKeepsNonCapFacets) {
  auto P1 = quadrilateral();
  auto a = minkowski_sum(P1, strip(5)).first;
  auto b = minkowski_sum(P1, strip(50)).first;
  EXPECT_EQ(noncap_set(a), noncap_set(b));
}

TEST(Minkowski, NonCapVerticesMakeNonCapFacets) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto P = gen::random_tagged(rng, n, 6);
    auto Q = gen::random_tagged(rng, n, 6);
    auto [S, cert] = minkowski_sum(P, Q);
    for (std::size_t h = 0; h < S.halfspaces.size(); ++h) {
      bool all_noncap = true;
      for (auto v : S.incidence[h]) all_noncap = all_noncap && S.vertices[v].tag == Tag::NonCap;
      if (all_noncap) EXPECT_EQ(S.halfspaces[h].tag, Tag::NonCap);
    }
  }
}

TEST(Minkowski, LowerDimensionalOperands) {
  auto seg = v_to_h({{0, 0}, {2, 0}}, 2);
  auto seg2 = v_to_h({{0, 0}, {0, 3}}, 2);
  auto [S, cert] = minkowski_sum(seg, seg2);
  EXPECT_EQ(S.vertex_coords(), (std::vector<Vec>{{0, 0}, {0, 3}, {2, 0}, {2, 3}}));
  for (const auto& h : S.halfspaces) EXPECT_EQ(h.tag, Tag::NonCap);
  auto [T, c2] = minkowski_sum(seg, seg);
  EXPECT_EQ(T.vertex_coords(), (std::vector<Vec>{{0, 0}, {4, 0}}));
  for (const auto& h : T.halfspaces) EXPECT_EQ(h.tag, Tag::NonCap);
}

TEST(Minkowski, DimMismatch) {
  EXPECT_THROW(minkowski_sum(v_to_h({{0, 0}}, 2), v_to_h({{0, 0, 0}}, 3)), Error);
}
