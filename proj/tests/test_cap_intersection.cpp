#include "tolpoly/cap_intersection.hpp"
#include "tolpoly/error.hpp"

#include "random_polytopes.hpp"

#include <gtest/gtest.h>

using namespace tolpoly;

namespace {

// |x| <= xr, |y| <= yr with the given tags.
TrackedPolytope rect(int xr, Tag xt, int yr, Tag yt) {
  return h_to_v({canonicalize(Vec{1, 0}, xr, xt), canonicalize(Vec{-1, 0}, xr, xt), canonicalize(Vec{0, 1}, yr, yt),
                 canonicalize(Vec{0, -1}, yr, yt)},
                2);
}

std::vector<std::pair<Vec, Scalar>> noncap_set(const TrackedPolytope& P) {
  std::vector<std::pair<Vec, Scalar>> out;
  for (const auto& h : rows_with_tag(P, Tag::NonCap)) out.emplace_back(h.normal, h.offset);
  return out;
}

}  // namespace

TEST(CapIntersection, CrossingStripsHaveNoCaps) {
  auto P1 = rect(1, Tag::NonCap, 10, Tag::Cap);
  auto P2 = rect(10, Tag::Cap, 2, Tag::NonCap);
  auto rep = capped_intersection({P1, P2});
  EXPECT_EQ(rep.result.count(Tag::Cap), 0u);
  EXPECT_TRUE(rep.box_facets.empty());
  EXPECT_EQ(rep.result.vertex_coords(), (std::vector<Vec>{{-1, -2}, {-1, 2}, {1, -2}, {1, 2}}));
  for (const auto& v : rep.result.vertices) EXPECT_EQ(v.tag, Tag::NonCap);
}

TEST(CapIntersection, ParallelStripsUseTheBox) {
  auto P1 = rect(1, Tag::NonCap, 3, Tag::Cap);
  auto P2 = rect(2, Tag::NonCap, 5, Tag::Cap);
  auto rep = capped_intersection({P1, P2}, Scalar(1));
  EXPECT_EQ(rep.box.lower, (Vec{-3, -6}));
  EXPECT_EQ(rep.box.upper, (Vec{3, 6}));
  EXPECT_EQ(rep.result.vertex_coords(), (std::vector<Vec>{{-1, -6}, {-1, 6}, {1, -6}, {1, 6}}));
  ASSERT_EQ(rep.box_facets.size(), 2u);
  for (auto h : rep.box_facets) {
    EXPECT_EQ(rep.result.halfspaces[h].tag, Tag::Cap);
    EXPECT_EQ(rep.result.halfspaces[h].provenance.rfind("box:", 0), 0u);
  }
  EXPECT_EQ(rep.result.count(Tag::NonCap), 2u);
  EXPECT_TRUE(rep.naive_differs);
  for (const auto& v : rep.result.vertices) EXPECT_EQ(v.tag, Tag::Cap);

  auto naive = naive_tagged_intersection({P1, P2});
  EXPECT_EQ(support_value(naive, {0, 1}), 3);
}

TEST(CapIntersection, Absorption) {
  auto small = rect(1, Tag::NonCap, 1, Tag::NonCap);
  auto big = rect(3, Tag::NonCap, 3, Tag::NonCap);
  auto rep = capped_intersection({small, big});
  EXPECT_EQ(noncap_set(rep.result), noncap_set(small));
  EXPECT_FALSE(rep.naive_differs);
}

TEST(CapIntersection, NaiveIdenticalAndDisjoint) {
  auto P = rect(1, Tag::NonCap, 2, Tag::Cap);
  auto naive = naive_tagged_intersection({P, P});
  EXPECT_EQ(naive.vertex_coords(), P.vertex_coords());
  EXPECT_EQ(naive.count(Tag::Cap), 2u);
  auto far = h_to_v({canonicalize(Vec{1, 0}, 10), canonicalize(Vec{-1, 0}, -8), canonicalize(Vec{0, 1}, 1),
                     canonicalize(Vec{0, -1}, 1)},
                    2);
  EXPECT_THROW(naive_tagged_intersection({P, far}), Error);
  try {
    capped_intersection({P, far});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyPolytope);
  }
}

TEST(CapIntersection, MarginIndependenceAndSoundness) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t n = 2 + trial % 2;
    auto P1 = gen::random_tagged(rng, n, 8);
    auto P2 = gen::random_tagged(rng, n, 8);
    IntersectionReport a, b;
    try {
      a = capped_intersection({P1, P2}, Scalar(1));
      b = capped_intersection({P1, P2}, Scalar(7, 2));
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::EmptyPolytope);
      continue;
    }
    EXPECT_EQ(noncap_set(a.result), noncap_set(b.result));
    for (const auto* P : {&P1, &P2}) {
      for (const auto& h : P->underlying)
        if (h.tag == Tag::NonCap) EXPECT_TRUE(includes(a.result, {h}).included);
    }
    for (const auto& v : a.result.vertices) {
      bool on_box = false;
      for (const auto& h : a.box.halfspaces()) on_box = on_box || h.tight_at(v.coords);
      EXPECT_EQ(v.tag == Tag::Cap, on_box);
    }
  }
}

TEST(CapIntersection, BoundedNonCapSystemMatchesPlainHull) {
  auto P1 = rect(2, Tag::NonCap, 9, Tag::Cap);
  auto P2 = h_to_v({canonicalize(Vec{1, 1}, 1), canonicalize(Vec{-1, 1}, 1), canonicalize(Vec{0, -1}, 1),
                    canonicalize(Vec{1, 0}, 20, Tag::Cap)},
                   2);
  auto rep = capped_intersection({P1, P2});
  std::vector<TaggedHalfSpace> rows = P1.underlying;
  rows.insert(rows.end(), P2.underlying.begin(), P2.underlying.end());
  EXPECT_EQ(rep.result.vertex_coords(), h_to_v(rows, 2).vertex_coords());
  EXPECT_EQ(rep.result.count(Tag::Cap), 0u);
}

TEST(CapIntersection, Errors) {
  auto P = rect(1, Tag::NonCap, 1, Tag::NonCap);
  EXPECT_THROW(capped_intersection({P}), Error);
  EXPECT_THROW(capped_intersection({P, P}, Scalar(0)), Error);
  EXPECT_THROW(capped_intersection({P, v_to_h({{0, 0, 0}}, 3)}), Error);
  EXPECT_EQ(default_margin({{0, 0}, {50, 3}}), 5);
  EXPECT_EQ(default_margin({{0, 0}, {2, 3}}), 1);
}
