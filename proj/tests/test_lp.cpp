#include "tolpoly/lp.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace tolpoly;

TEST(Lp, SquareOptimum) {
  Matrix A{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  Vec b{1, 1, 2, 2};
  auto r = lp::maximize(A, b, {3, -1});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 5);
  EXPECT_EQ(r.x, (Vec{1, -2}));
}

TEST(Lp, UnboundedAndInfeasible) {
  EXPECT_EQ(lp::maximize({{1, 0}}, {1}, {0, 1}).status, lp::Status::Unbounded);
  EXPECT_EQ(lp::maximize({{1}, {-1}}, {-1, 0}, {1}).status, lp::Status::Infeasible);
  EXPECT_FALSE(lp::feasible({{1}, {-1}}, {-1, 0}, 1));
  EXPECT_TRUE(lp::feasible({{1}, {-1}}, {0, 0}, 1));
}

TEST(Lp, DegenerateApex) {
  // Many rows through the same vertex; Bland's rule must not cycle.
  Matrix A;
  Vec b;
  for (int k = 1; k <= 6; ++k) {
    A.push_back({k, 1, 1});
    b.push_back(0);
  }
  A.push_back({-1, 0, 0});
  A.push_back({0, -1, 0});
  A.push_back({0, 0, -1});
  b.insert(b.end(), {0, 0, 0});
  auto r = lp::maximize(A, b, {1, 1, 1});
  ASSERT_EQ(r.status, lp::Status::Optimal);
  EXPECT_EQ(r.value, 0);
}

TEST(Lp, MatchesVertexEnumeration) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<TaggedHalfSpace> rows;
    for (int i = 0; i < 3; ++i) {
      rows.push_back(canonicalize(unit(3, i), 5));
      rows.push_back(canonicalize(negate(unit(3, i)), 5));
    }
    for (int i = 0; i < 5; ++i) {
      Vec a = oracle::random_point(rng, 3, -3, 3);
      if (is_zero(a)) continue;
      rows.push_back(canonicalize(a, std::uniform_int_distribution<int>(1, 8)(rng)));
    }
    Matrix A;
    Vec b;
    for (const auto& r : rows) {
      A.push_back(r.normal);
      b.push_back(r.offset);
    }
    Vec c = oracle::random_point(rng, 3, -4, 4);
    auto verts = oracle::vertices(rows, 3);
    ASSERT_FALSE(verts.empty());
    Scalar best = dot(c, verts[0]);
    for (const auto& v : verts) best = std::max(best, Scalar(dot(c, v)));
    auto r = lp::maximize(A, b, c);
    ASSERT_EQ(r.status, lp::Status::Optimal);
    EXPECT_EQ(r.value, best);
    EXPECT_EQ(dot(c, r.x), best);
    for (const auto& row : rows) EXPECT_TRUE(row.contains(r.x));
  }
}
