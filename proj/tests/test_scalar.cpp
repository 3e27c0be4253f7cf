#include "tolpoly/halfspace.hpp"
#include "tolpoly/linalg.hpp"
#include "tolpoly/scalar.hpp"

#include <gtest/gtest.h>

using namespace tolpoly;

TEST(Scalar, ParsesFractionsDecimalsExponents) {
  EXPECT_EQ(parse_scalar("3/4"), Scalar(3, 4));
  EXPECT_EQ(parse_scalar("-0.25"), Scalar(-1, 4));
  EXPECT_EQ(parse_scalar("1.5e-3"), Scalar(3, 2000));
  EXPECT_EQ(parse_scalar("12"), Scalar(12));
  EXPECT_EQ(parse_scalar("2E2"), Scalar(200));
  EXPECT_THROW(parse_scalar("abc"), std::invalid_argument);
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
}

TEST(Scalar, Formatting) {
  EXPECT_EQ(to_string(Scalar(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Scalar(5)), "5");
  EXPECT_EQ(to_decimal(Scalar(1, 3), 3), "0.333");
  EXPECT_EQ(to_decimal(Scalar(-2, 3), 2), "-0.67");
}

TEST(Scalar, PrimitiveVector) {
  Vec v{Scalar(1, 2), Scalar(-3, 4), 0};
  EXPECT_EQ(primitive(v), (Vec{2, -3, 0}));
}

TEST(HalfSpace, CanonicalKeepsDirection) {
  auto h = canonicalize(Vec{-2, 0}, 6);
  EXPECT_EQ(h.normal, (Vec{-1, 0}));
  EXPECT_EQ(h.offset, 3);
  EXPECT_THROW(canonicalize(Vec{0, 0}, 1), std::runtime_error);
}

TEST(HalfSpace, DuplicateKeepsNonCap) {
  auto rows = canonical_set({canonicalize(Vec{2, 0}, 2, Tag::Cap), canonicalize(Vec{1, 0}, 1, Tag::NonCap)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].tag, Tag::NonCap);
}

TEST(Linalg, RankNullspace) {
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  EXPECT_EQ(rank(m, 3), 2u);
  auto ns = nullspace(m, 3);
  ASSERT_EQ(ns.size(), 1u);
  for (const auto& r : m) EXPECT_EQ(dot(r, ns[0]), 0);
  EXPECT_EQ(affine_dimension({{0, 0}, {1, 1}, {2, 2}}), 1);
  EXPECT_EQ(affine_dimension({}), -1);
}
