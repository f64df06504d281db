#include <gtest/gtest.h>

#include "oracle.hpp"
#include "unital_lab/construct.hpp"

using namespace unital_lab;

namespace {

oracle::NaiveExt::E E(Fq2 x) { return {x.c0().index(), x.c1().index()}; }

std::vector<std::uint32_t> odd_prime_powers(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 3; q <= limit; q += 2)
    if (prime_power(q)) out.push_back(q);
  return out;
}

// all seven points checked with the reference membership test
void expect_oracle_valid(const Construction& c) {
  const FieldCtx& ctx = c.params.ctx();
  oracle::NaiveField nf(ctx.p(), ctx.exp(), ctx.modulus());
  oracle::NaiveExt F(nf);
  const SevenPoints& s = c.config.points;
  for (const ProjPoint* pt : {&s.P, &s.Q, &s.X, &s.Y, &s.V, &s.M, &s.N})
    EXPECT_TRUE(oracle::unital_contains(F, E(c.params.a), E(c.params.b), E(pt->x), E(pt->y), E(pt->z))) << *pt;
  Unital u(validate(c.params.a, c.params.b));
  EXPECT_TRUE(verify_triple_onan(u, s).valid);
  EXPECT_TRUE(check_equations(c.params).all());
}

TEST(Cyclotomic, TablesMatchDefinition) {
  for (std::uint32_t q : odd_prime_powers(49)) {
    auto c = FieldCtx::for_order(q);
    oracle::NaiveField nf(c->p(), c->exp(), c->modulus());
    for (std::uint32_t order : {2u, 4u}) {
      if (order == 4 && q % 4 != 1) {
        EXPECT_THROW(cyclotomic(*c, order), InvalidParameters);
        continue;
      }
      CyclotomicTable t = cyclotomic(*c, order);
      for (std::uint32_t i = 0; i < order; ++i)
        for (std::uint32_t j = 0; j < order; ++j)
          ASSERT_EQ(t.at(i, j), oracle::cyclotomic_number(nf, order, i, j)) << "q=" << q;
      EXPECT_EQ(t.total(), q - 2);
    }
  }
}

TEST(Cyclotomic, IdentitiesHoldUpTo199) {
  for (std::uint32_t q : odd_prime_powers(199)) {
    auto c = FieldCtx::for_order(q);
    auto r2 = check_cyclotomic_identities(cyclotomic(*c, 2));
    EXPECT_TRUE(r2.holds) << "q=" << q << " " << (r2.failures.empty() ? "" : r2.failures.front());
    if (q % 4 == 1) {
      auto r4 = check_cyclotomic_identities(cyclotomic(*c, 4));
      EXPECT_TRUE(r4.holds) << "q=" << q << " " << (r4.failures.empty() ? "" : r4.failures.front());
      ConicPairCount n = count_conic_xy_pairs(*c);
      EXPECT_TRUE(n.agree()) << "q=" << q;
      if (q > 5) EXPECT_GT(n.direct, 0u) << "q=" << q;
    }
  }
}

TEST(Cyclotomic, ConicPairsMatchBruteForce) {
  for (std::uint32_t q : {5u, 9u, 13u, 17u, 25u}) {
    auto c = FieldCtx::for_order(q);
    auto cls = [&](Fq x) { return residue_class(x, 4); };
    std::uint64_t n = 0;
    for (Fq X : c->units_q())
      for (Fq Y : c->units_q()) {
        Fq X1 = X + c->one(), Y1 = Y + c->one();
        if (X1.is_zero() || Y1.is_zero()) continue;
        if (cls(X) == 1 && cls(Y) == 1 && cls(X1) % 2 == 0 && cls(Y1) % 2 == 1) ++n;
        if (cls(X) == 3 && cls(Y) == 3 && cls(X1) % 2 == 1 && cls(Y1) % 2 == 0) ++n;
      }
    EXPECT_EQ(count_conic_xy_pairs(*c).direct, n);
    EXPECT_EQ(conic_xy_candidates(*c).size(), n);
  }
}

TEST(Construct, ConicUnital) {
  for (std::uint32_t q : {3u, 5u}) {
    auto c = FieldCtx::for_order(q);
    EXPECT_FALSE(conic_construction(Unital(validate(c->g(), c->zero2()))).has_value());
  }
  for (std::uint32_t q : {7u, 9u, 11u, 13u, 17u, 19u, 25u, 27u}) {
    auto c = FieldCtx::for_order(q);
    auto con = conic_construction(Unital(validate(c->g(), c->zero2())));
    ASSERT_TRUE(con.has_value()) << "q=" << q;
    expect_oracle_valid(*con);
    // the other non-square representative also works
    auto con2 = conic_construction(Unital(validate(c->g_pow(3), c->zero2())));
    ASSERT_TRUE(con2.has_value());
    expect_oracle_valid(*con2);
  }
  auto c = FieldCtx::for_order(7);
  EXPECT_THROW(conic_construction(Unital(validate(c->one2(), Fq2(*least_valid_b1(c->one2())) * c->e()))),
               InvalidParameters);
}

TEST(Construct, Asq14AllB1) {
  for (std::uint32_t q : {5u, 9u, 13u, 17u}) {
    auto c = FieldCtx::for_order(q);
    auto b1s = valid_b1_values(c->one2());
    ASSERT_FALSE(b1s.empty());
    for (Fq b1 : b1s) {
      auto con = asq14_construction(*c, b1);
      ASSERT_TRUE(con.has_value()) << "q=" << q;
      expect_oracle_valid(*con);
    }
  }
  EXPECT_THROW(asq14_construction(*FieldCtx::for_order(7), FieldCtx::for_order(7)->one()), InvalidParameters);
}

TEST(Construct, Q3AllB1AndCounts) {
  for (std::uint32_t q : {7u, 11u, 19u, 23u, 27u}) {
    auto c = FieldCtx::for_order(q);
    for (Fq b1 : valid_b1_values(c->one2())) {
      Q3Result r = q3_construction(*c, b1);
      ASSERT_TRUE(r.construction.has_value()) << "q=" << q;
      expect_oracle_valid(*r.construction);
      EXPECT_EQ(r.type_compatible_pairs, std::uint64_t{(q - 3) / 2} * ((q - 1) / 2));
      // brute count of X(X+1) = -Y(Y+1) != 0
      std::uint64_t sols = 0;
      for (Fq X : c->elements_q())
        for (Fq Y : c->elements_q()) {
          Fq l = X * (X + c->one());
          if (!l.is_zero() && l == -(Y * (Y + c->one()))) ++sols;
        }
      EXPECT_EQ(r.solution_pairs, sols);
    }
  }
}

TEST(Construct, TransferRoundTrip) {
  for (std::uint32_t q : {7u, 9u, 11u}) {
    auto c = FieldCtx::for_order(q);
    auto b1s = valid_b1_values(c->one2());
    ASSERT_GE(b1s.size(), 2u);
    for (Fq2 a : {c->one2(), c->g()}) {
      auto bs = valid_b1_values(a);
      if (bs.size() < 2) continue;
      Unital u1(validate(a, Fq2(bs[0]) * c->e()));
      // a configuration of U(a, b1 e) from the equations: scan small frames
      std::optional<TripleOnanParams> start;
      for (Fq2 x : c->units_q2()) {
        for (Fq2 k : c->units_q2()) {
          if (!u1.contains_affine(x * k, k)) continue;
          for (Fq2 h : c->units_q2()) {
            if (h.in_base_field() || !u1.contains_affine(x * h * k, h * k)) continue;
            for (Fq s : c->units_q())
              for (Fq t : c->units_q()) {
                TripleOnanParams p{a, Fq2(bs[0]) * c->e(), x, k, h, s, t};
                if (params_ok(p) && check_equations(p).all()) {
                  start = p;
                  goto found;
                }
              }
          }
        }
      }
    found:
      ASSERT_TRUE(start.has_value());
      for (std::size_t i = 1; i < bs.size(); ++i) {
        TransferResult tr = transfer_b(*start, bs[i]);
        EXPECT_EQ(tr.params.h, start->h);
        EXPECT_EQ(tr.params.s, start->s);
        EXPECT_EQ(tr.params.t, start->t);
        EXPECT_TRUE(check_equations(tr.params).all());
        TransferResult back = transfer_b(tr.params, bs[0]);
        EXPECT_TRUE(check_equations(back.params).all());
        Unital u2(validate(a, Fq2(bs[i]) * c->e()));
        EXPECT_TRUE(verify_triple_onan(u2, realize(tr.params).points).valid);
      }
    }
  }
}

}  // namespace
