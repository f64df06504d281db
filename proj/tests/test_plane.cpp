#include <gtest/gtest.h>

#include <random>
#include <set>

#include "unital_lab/plane.hpp"

using namespace unital_lab;

namespace {

class PlaneTest : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PlaneTest, IndexIsABijection) {
  auto c = FieldCtx::for_order(GetParam());
  const std::uint64_t n = plane_size(*c);
  const std::uint64_t q2 = c->q2();
  EXPECT_EQ(n, q2 * q2 + q2 + 1);
  for (std::uint64_t i = 0; i < n; ++i) {
    ASSERT_EQ(point_index(point_from_index(*c, i)), i);
    ASSERT_EQ(line_index(line_from_index(*c, i)), i);
  }
}

TEST_P(PlaneTest, LinesCarryQSquaredPlusOnePoints) {
  auto c = FieldCtx::for_order(GetParam());
  std::mt19937_64 rng(7);
  const std::uint64_t n = plane_size(*c);
  for (int it = 0; it < 50; ++it) {
    ProjLine l = line_from_index(*c, rng() % n);
    auto pts = points_on_line(l);
    ASSERT_EQ(pts.size(), std::size_t{c->q2()} + 1);
    std::set<std::uint64_t> ids;
    for (const auto& p : pts) {
      ASSERT_TRUE(incident(l, p));
      ids.insert(point_index(p));
    }
    ASSERT_EQ(ids.size(), pts.size());
  }
}

TEST_P(PlaneTest, JoinAndMeetAreIncident) {
  auto c = FieldCtx::for_order(GetParam());
  std::mt19937_64 rng(11);
  const std::uint64_t n = plane_size(*c);
  for (int it = 0; it < 500; ++it) {
    ProjPoint a = point_from_index(*c, rng() % n), b = point_from_index(*c, rng() % n);
    if (a == b) {
      EXPECT_THROW(join(a, b), Degenerate);
      continue;
    }
    ProjLine l = join(a, b);
    ASSERT_TRUE(incident(l, a));
    ASSERT_TRUE(incident(l, b));
    ASSERT_EQ(l, join(b, a));
    ProjLine m = line_from_index(*c, rng() % n);
    if (m == l) continue;
    ProjPoint x = meet(l, m);
    ASSERT_TRUE(incident(l, x));
    ASSERT_TRUE(incident(m, x));
  }
}

TEST_P(PlaneTest, NormalizationIsCanonical) {
  auto c = FieldCtx::for_order(GetParam());
  Fq2 s = c->g();
  ProjPoint p = make_point(c->fq2(1u, 2u), c->fq2(0u, 1u), c->one2());
  EXPECT_EQ(make_point(p.x * s, p.y * s, p.z * s), p);
  EXPECT_THROW(make_point(c->zero2(), c->zero2(), c->zero2()), Degenerate);
}

TEST_P(PlaneTest, CollineationsPreserveIncidence) {
  auto c = FieldCtx::for_order(GetParam());
  std::mt19937_64 rng(3);
  const auto all = c->elements_q2();
  for (int it = 0; it < 20; ++it) {
    Collineation::Matrix m;
    for (auto& v : m) v = all[rng() % all.size()];
    bool singular = false;
    try {
      Collineation probe(m);
    } catch (const Degenerate&) {
      singular = true;
    }
    if (singular) continue;
    Collineation g(m);
    const std::uint64_t n = plane_size(*c);
    for (int k = 0; k < 20; ++k) {
      ProjPoint a = point_from_index(*c, rng() % n), b = point_from_index(*c, rng() % n);
      if (a == b) continue;
      ProjLine l = join(a, b);
      ASSERT_EQ(g.apply(l), join(g.apply(a), g.apply(b)));
    }
    Collineation id = Collineation::identity(*c);
    ProjPoint a = point_from_index(*c, rng() % n);
    EXPECT_EQ(g.compose(id).apply(a), g.apply(a));
    EXPECT_EQ(g.compose(g).apply(a), g.apply(g.apply(a)));
  }
}

INSTANTIATE_TEST_SUITE_P(Orders, PlaneTest, ::testing::Values(3u, 5u, 9u));

TEST(Plane, CollinearAndConcurrent) {
  auto c = FieldCtx::for_order(5);
  ProjPoint a = affine_point(c->zero2(), c->zero2());
  ProjPoint b = affine_point(c->one2(), c->one2());
  ProjPoint d = affine_point(c->fq2(2u, 0u), c->fq2(2u, 0u));
  ProjPoint e = affine_point(c->one2(), c->zero2());
  EXPECT_TRUE(collinear(a, b, d));
  EXPECT_FALSE(collinear(a, b, e));
  EXPECT_TRUE(concurrent(join(a, b), join(a, e), join(a, d)));
  EXPECT_FALSE(concurrent(join(a, b), join(b, e), join(e, a)));
}

}  // namespace
