#include <gtest/gtest.h>

#include "unital_lab/json_io.hpp"

using namespace unital_lab;

namespace {

TEST(Json, HeaderRoundTrip) {
  for (std::uint32_t q : {3u, 7u, 9u, 25u, 27u}) {
    auto c = FieldCtx::for_order(q);
    json h = ctx_header(*c);
    auto back = ctx_from_header(json::parse(h.dump()));
    EXPECT_EQ(back->q(), c->q());
    EXPECT_EQ(back->modulus(), c->modulus());
    EXPECT_EQ(back->g().index(), c->g().index());
  }
  json bad = ctx_header(*FieldCtx::for_order(7));
  bad["w"] = 5;
  EXPECT_THROW(ctx_from_header(bad), InvalidParameters);
}

TEST(Json, ElementsPointsLines) {
  auto c = FieldCtx::for_order(9);
  for (Fq2 x : c->elements_q2()) EXPECT_EQ(fq2_from_json(*c, json::parse(to_json(x).dump())), x);
  for (Fq x : c->elements_q()) EXPECT_EQ(fq_from_json(*c, to_json(x)), x);
  for (std::uint64_t i = 0; i < plane_size(*c); i += 37) {
    ProjPoint p = point_from_index(*c, i);
    ProjLine l = line_from_index(*c, i);
    EXPECT_EQ(point_from_json(*c, to_json(p)), p);
    EXPECT_EQ(line_from_json(*c, to_json(l)), l);
  }
  EXPECT_THROW(fq2_from_json(*c, json::array({1, 9})), InvalidParameters);
  EXPECT_THROW(fq2_from_json(*c, json::array({1})), InvalidParameters);
  EXPECT_THROW(fq_from_json(*c, json(-1)), InvalidParameters);
}

TEST(Json, ConfigurationRoundTrip) {
  auto c = FieldCtx::for_order(7);
  Unital u(validate(c->g(), c->zero2()));
  auto con = conic_construction(u);
  ASSERT_TRUE(con);
  json j = json::parse(config_to_json(u, con->config).dump());
  TripleOnanConfig back = config_from_json(*c, j);
  EXPECT_EQ(back.id(), con->config.id());
  EXPECT_EQ(back.bm_special, con->config.bm_special);
  EXPECT_TRUE(verify_triple_onan(u, back.points).valid);

  json tampered = j;
  tampered["lines"][0]["coords"] = to_json(con->config.lines[1]);
  EXPECT_THROW(config_from_json(*c, tampered), InvalidParameters);

  TripleOnanParams p = triple_params_from_json(*c, json::parse(to_json(con->params).dump()));
  EXPECT_EQ(p, con->params);
  UnitalParams up = unital_params_from_json(*c, to_json(u.params()));
  EXPECT_EQ(up.a, u.a());
}

TEST(Json, OnanRoundTrip) {
  auto c = FieldCtx::for_order(7);
  Unital u(validate(c->one2(), Fq2(*least_valid_b1(c->one2())) * c->e()));
  FengLiScan scan = feng_li_scan(u);
  ASSERT_FALSE(scan.configs.empty());
  const OnanConfig& on = *scan.configs.front().onan;
  OnanConfig back = onan_from_json(*c, json::parse(onan_to_json(u, on).dump()));
  EXPECT_EQ(back.id(), on.id());
  EXPECT_EQ(back.points, on.points);
}

}  // namespace
