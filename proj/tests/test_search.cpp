#include <gtest/gtest.h>

#include "unital_lab/search.hpp"

using namespace unital_lab;

namespace {

UnitalParams make(const FieldCtx& c, bool square) {
  Fq2 a = square ? c.one2() : c.g();
  if (auto b1 = least_valid_b1(a)) return validate(a, Fq2(*b1) * c.e());
  return validate(a, c.zero2());
}

struct Baseline {
  std::uint32_t q;
  bool square;
  std::uint64_t canonical;
};

class Regression : public ::testing::TestWithParam<Baseline> {};

TEST_P(Regression, CanonicalCounts) {
  auto c = FieldCtx::for_order(GetParam().q);
  Unital u(make(*c, GetParam().square));
  SearchResult r = canonical_search(u, 2);
  EXPECT_EQ(r.report.configurations, GetParam().canonical);
  EXPECT_EQ(r.report.tuples, 4 * r.report.configurations);
  const std::uint64_t q = c->q();
  EXPECT_EQ(r.report.total, q * q * q * r.report.configurations);
  EXPECT_EQ(r.configs.size(), r.params.size());
  for (std::size_t i = 0; i < r.configs.size(); ++i) {
    EXPECT_TRUE(r.configs[i].bm_special);
    EXPECT_EQ(realize(r.params[i]).id(), r.configs[i].id());
  }
}

INSTANTIATE_TEST_SUITE_P(Baselines, Regression,
                         ::testing::Values(Baseline{3, false, 0}, Baseline{5, false, 0}, Baseline{5, true, 80},
                                           Baseline{7, false, 288}, Baseline{7, true, 216}, Baseline{9, false, 896},
                                           Baseline{9, true, 832}));

TEST(Search, ThreadCountDoesNotChangeTheResult) {
  auto c = FieldCtx::for_order(7);
  Unital u(make(*c, true));
  SearchResult one = canonical_search(u, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    SearchResult many = canonical_search(u, t);
    EXPECT_EQ(many.report.tuples, one.report.tuples);
    ASSERT_EQ(many.params, one.params);
    EXPECT_EQ(many.report.tested, one.report.tested);
  }
}

TEST(Search, RejectsClassical) {
  auto c = FieldCtx::for_order(5);
  EXPECT_THROW(canonical_search(Unital(validate(c->zero2(), c->e()))), InvalidParameters);
}

TEST(Search, CountsAreInvariantInB) {
  for (std::uint32_t q : {5u, 7u}) {
    auto c = FieldCtx::for_order(q);
    std::vector<std::pair<Fq2, Fq2>> ab;
    for (Fq b1 : valid_b1_values(c->one2())) ab.emplace_back(c->one2(), Fq2(b1) * c->e());
    auto v = count_invariance_check(ab, 2);
    EXPECT_TRUE(v.equal);
    EXPECT_EQ(v.counts.size(), ab.size());
  }
  auto c = FieldCtx::for_order(7);
  std::vector<std::pair<Fq2, Fq2>> mixed{{c->one2(), Fq2(*least_valid_b1(c->one2())) * c->e()}, {c->g(), c->zero2()}};
  EXPECT_THROW(count_invariance_check(mixed), InvalidParameters);
}

TEST(Oracle, FullEnumerationMatchesTranslatedCanonicalSet) {
  for (std::uint32_t q : {3u, 5u}) {
    auto c = FieldCtx::for_order(q);
    for (bool square : {false, true}) {
      Fq2 a = square ? c->one2() : c->g();
      if (!least_valid_b1(a) && !try_validate(a, c->zero2())) continue;  // q = 3 has no square-a unital
      UnitalParams p = make(*c, square);
      Unital u(p);
      SearchResult s = canonical_search(u);
      OracleResult o = direct_enumeration_oracle(u, std::uint64_t{1} << 40);
      std::uint64_t qq = q;
      EXPECT_EQ(o.configs.size(), qq * qq * qq * s.report.configurations) << "q=" << q;
      EXPECT_EQ(translate_configs(u, s.configs), o.configs);
    }
  }
}

TEST(Oracle, SpecialLineSliceAtSeven) {
  auto c = FieldCtx::for_order(7);
  Unital u(validate(c->g(), c->zero2()));
  SearchResult s = canonical_search(u, 2);
  OracleResult o = direct_enumeration_oracle(u, std::uint64_t{1} << 40, true);
  EXPECT_TRUE(o.sliced);
  EXPECT_EQ(o.configs.size(), 7 * s.report.configurations);
  EXPECT_EQ(translate_configs(u, s.configs, true), o.configs);
}

TEST(Oracle, ResourceCap) {
  auto c = FieldCtx::for_order(5);
  EXPECT_THROW(direct_enumeration_oracle(Unital(validate(c->g(), c->zero2())), 1000), ResourceCap);
}

}  // namespace
