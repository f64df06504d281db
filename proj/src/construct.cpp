#include "unital_lab/construct.hpp"

#include <algorithm>

namespace unital_lab {

// ---------------------------------------------------------------- cyclotomy

std::uint64_t CyclotomicTable::at(std::int64_t i, std::int64_t j) const {
  const std::int64_t k = order;
  return counts[static_cast<std::size_t>(((i % k) + k) % k)][static_cast<std::size_t>(((j % k) + k) % k)];
}

std::uint64_t CyclotomicTable::total() const {
  std::uint64_t s = 0;
  for (const auto& row : counts)
    for (auto c : row) s += c;
  return s;
}

std::uint32_t residue_class(Fq x, std::uint32_t order) { return x.ctx().log(x) % order; }

CyclotomicTable cyclotomic(const FieldCtx& ctx, std::uint32_t order) {
  if (order != 2 && order != 4) throw InvalidParameters("cyclotomic order must be 2 or 4");
  if (order == 4 && ctx.q() % 4 != 1) throw InvalidParameters("order 4 cyclotomic numbers need q = 1 mod 4");
  CyclotomicTable t;
  t.q = ctx.q();
  t.order = order;
  t.w = ctx.w();
  t.counts.assign(order, std::vector<std::uint64_t>(order, 0));
  for (Fq x : ctx.units_q()) {
    Fq x1 = x + ctx.one();
    if (x1.is_zero()) continue;
    ++t.counts[residue_class(x, order)][residue_class(x1, order)];
  }
  return t;
}

std::pair<std::uint64_t, std::uint64_t> cyclotomic_l1_l2(const CyclotomicTable& t) {
  if (t.order != 4) throw InvalidParameters("l1, l2 are defined for order 4");
  if (t.q % 8 == 1) return {t.at(1, 2), t.at(0, 3)};
  return {t.at(1, 0), t.at(0, 3)};
}

namespace {

struct Checker {
  IdentityReport& rep;
  const CyclotomicTable& t;
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      rep.holds = false;
      rep.failures.push_back(what);
    }
  }
  void group(std::initializer_list<std::pair<int, int>> cells, std::int64_t value, const std::string& name) {
    for (auto [i, j] : cells)
      expect(static_cast<std::int64_t>(t.at(i, j)) == value,
             "(" + std::to_string(i) + "," + std::to_string(j) + ") != " + name);
  }
};

}  // namespace

IdentityReport check_cyclotomic_identities(const CyclotomicTable& t) {
  IdentityReport rep;
  Checker ck{rep, t};
  const std::int64_t q = t.q;
  ck.expect(t.total() == t.q - 2, "entries do not sum to q - 2");

  if (t.order == 2) {
    if (q % 4 == 3) {
      const std::int64_t m = (q - 3) / 4;
      ck.group({{0, 0}, {1, 0}, {1, 1}}, m, "(q-3)/4");
      ck.group({{0, 1}}, m + 1, "(q+1)/4");
    } else {
      ck.group({{0, 0}}, (q - 5) / 4, "(q-5)/4");
      ck.group({{0, 1}, {1, 0}, {1, 1}}, (q - 1) / 4, "(q-1)/4");
    }
    return rep;
  }

  const bool one_mod_8 = q % 8 == 1;
  for (int i = 0; i < 4; ++i) {
    std::int64_t row = 0;
    for (int j = 0; j < 4; ++j) {
      row += static_cast<std::int64_t>(t.at(i, j));
      ck.expect(t.at(i, j) == t.at(-i, j - i), "(i,j) != (-i,j-i) at " + std::to_string(i) + "," + std::to_string(j));
      if (one_mod_8)
        ck.expect(t.at(i, j) == t.at(j, i), "(i,j) != (j,i) at " + std::to_string(i) + "," + std::to_string(j));
      else
        ck.expect(t.at(i, j) == t.at(j + 2, i + 2),
                  "(i,j) != (j+2,i+2) at " + std::to_string(i) + "," + std::to_string(j));
    }
    const int special = one_mod_8 ? 0 : 2;
    ck.expect(row == (q - 1) / 4 - (i == special ? 1 : 0), "row sum " + std::to_string(i));
  }

  auto [u1, u2] = cyclotomic_l1_l2(t);
  const auto l1 = static_cast<std::int64_t>(u1), l2 = static_cast<std::int64_t>(u2);
  if (one_mod_8) {
    ck.group({{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}}, l1, "l1");
    ck.group({{0, 3}, {3, 0}, {1, 1}}, l2, "l2");
    ck.group({{0, 2}, {2, 0}, {2, 2}}, (q - 1) / 8 - l1, "(q-1)/8 - l1");
    ck.group({{0, 1}, {1, 0}, {3, 3}}, (q - 1) / 4 - 2 * l1 - l2, "(q-1)/4 - 2l1 - l2");
    ck.group({{0, 0}}, 3 * l1 - (q + 7) / 8, "3l1 - (q+7)/8");
  } else {
    ck.group({{1, 0}, {1, 1}, {2, 1}, {2, 3}, {3, 0}, {3, 3}}, l1, "l1");
    ck.group({{0, 3}, {1, 2}, {3, 1}}, l2, "l2");
    ck.group({{0, 1}, {1, 3}, {3, 2}}, (q - 1) / 4 - 2 * l1 - l2, "(q-1)/4 - 2l1 - l2");
    ck.group({{0, 0}, {2, 0}, {2, 2}}, (q - 5) / 8 - l1, "(q-5)/8 - l1");
    ck.group({{0, 2}}, 3 * l1 - (q - 5) / 8, "3l1 - (q-5)/8");
  }
  return rep;
}

namespace {

bool in_classes(Fq x, std::uint32_t order, std::initializer_list<std::uint32_t> classes) {
  if (x.is_zero()) return false;
  const std::uint32_t r = residue_class(x, order);
  return std::find(classes.begin(), classes.end(), r) != classes.end();
}

}  // namespace

std::vector<std::pair<Fq, Fq>> conic_xy_candidates(const FieldCtx& ctx) {
  std::vector<std::pair<Fq, Fq>> out;
  const Fq one = ctx.one();
  const auto units = ctx.units_q();
  if (ctx.q() % 4 == 1) {
    for (Fq X : units)
      for (Fq Y : units) {
        bool case1 = in_classes(X, 4, {1}) && in_classes(Y, 4, {1}) && in_classes(X + one, 4, {0, 2}) &&
                     in_classes(Y + one, 4, {1, 3});
        bool case3 = in_classes(X, 4, {3}) && in_classes(Y, 4, {3}) && in_classes(X + one, 4, {1, 3}) &&
                     in_classes(Y + one, 4, {0, 2});
        if (case1 || case3) out.emplace_back(X, Y);
      }
  } else {
    auto both_squares = [&](Fq z) { return in_classes(z, 2, {0}) && in_classes(z + one, 2, {0}); };
    auto square_then_non = [&](Fq z) { return in_classes(z, 2, {0}) && in_classes(z + one, 2, {1}); };
    for (Fq X : units)
      for (Fq Y : units)
        if ((both_squares(X) && square_then_non(Y)) || (square_then_non(X) && both_squares(Y))) out.emplace_back(X, Y);
  }
  return out;
}

ConicPairCount count_conic_xy_pairs(const FieldCtx& ctx) {
  if (ctx.q() % 4 != 1) throw InvalidParameters("the (X, Y) count is defined for q = 1 mod 4");
  ConicPairCount c;
  c.direct = conic_xy_candidates(ctx).size();
  CyclotomicTable t = cyclotomic(ctx, 4);
  c.product = (t.at(1, 0) + t.at(1, 2)) * (t.at(1, 1) + t.at(1, 3)) + (t.at(3, 0) + t.at(3, 2)) * (t.at(3, 1) + t.at(3, 3));
  std::tie(c.l1, c.l2) = cyclotomic_l1_l2(t);
  const std::int64_t rest = static_cast<std::int64_t>((ctx.q() - 1) / 4) - static_cast<std::int64_t>(c.l1 + c.l2);
  c.formula = static_cast<std::uint64_t>(2 * rest * static_cast<std::int64_t>(c.l1 + c.l2));
  return c;
}

// ------------------------------------------------------------ constructions

Fq2 conic_rhs(Fq2 h, Fq s, Fq t) {
  const FieldCtx& c = h.ctx();
  const Fq2 one = c.one2();
  const Fq2 S(s), T(t), sum(s + t);
  return -(one + one / (h * h)) * S * T / sum + (one / h) * (S * S + T * T) / sum;
}

Fq conic_xy_product(Fq h2, Fq u) {
  const Fq one = h2.ctx().one();
  return (one - h2 / (u * u)) * (one - h2 * u * u);
}

namespace {

bool conic_conditions(Fq h2, Fq u) {
  const FieldCtx& c = h2.ctx();
  if (u.is_zero() || h2.is_zero()) return false;
  if (is_square(h2) || h2 == -c.one()) return false;
  Fq u4 = u * u * u * u;
  return !(u4 == c.one());
}

std::optional<TripleOnanParams> conic_params(Fq2 a, Fq h2, Fq u) {
  const FieldCtx& c = a.ctx();
  if (!conic_conditions(h2, u)) return std::nullopt;
  const Fq2 h = sqrt(Fq2(h2));
  const Fq s = u, t = c.one();
  const Fq2 rhs = conic_rhs(h, s, t);
  const Fq2 target = rhs / (Fq2(c.fq_int(2)) * a);
  if (!is_square(target)) return std::nullopt;
  const Fq2 cc = Fq2((s * s + t * t) / (c.fq_int(2) * (s + t)));
  const Fq2 k = cc * (c.one2() + c.one2() / h);
  if (k.is_zero()) return std::nullopt;
  const Fq2 x = sqrt(target) / k;
  TripleOnanParams p{a, c.zero2(), x, k, h, s, t};
  if (!params_ok(p)) return std::nullopt;
  return p;
}

Construction finish(std::string method, const TripleOnanParams& p, std::uint64_t tried) {
  return Construction{std::move(method), p, realize(p), tried};
}

}  // namespace

std::vector<std::pair<Fq, Fq>> conic_sufficient_pairs(const FieldCtx& ctx) {
  std::vector<std::pair<Fq, Fq>> out;
  for (Fq h2 : ctx.units_q())
    for (Fq u : ctx.units_q()) {
      if (!conic_conditions(h2, u)) continue;
      if (!is_square(conic_rhs(sqrt(Fq2(h2)), u, ctx.one()))) out.emplace_back(h2, u);
    }
  return out;
}

std::optional<Construction> conic_construction(const Unital& un) {
  const FieldCtx& c = un.ctx();
  if (!un.b().is_zero()) throw InvalidParameters("conic construction needs b = 0");
  if (is_square(un.a())) throw InvalidParameters("conic construction needs a non-square a");
  std::uint64_t tried = 0;
  for (auto [X, Y] : conic_xy_candidates(c)) {
    for (Fq h2 : sqrt_all(X * Y)) {
      if (is_square(h2)) continue;
      for (Fq u : sqrt_all(-Y / h2)) {
        if (!(X == -h2 / (u * u))) continue;
        ++tried;
        auto p = conic_params(un.a(), h2, u);
        if (p && check_equations(*p).all()) return finish("conic", *p, tried);
      }
    }
  }
  return std::nullopt;
}

namespace {

Unital square_unital(const FieldCtx& ctx, Fq b1) {
  auto params = try_validate(ctx.one2(), Fq2(b1) * ctx.e());
  if (!params) throw InvalidParameters("(1, b1 e) is not a valid unital: discriminant is a square");
  return Unital(*params);
}

}  // namespace

std::optional<Construction> asq14_construction(const FieldCtx& ctx, Fq b1) {
  if (ctx.q() % 4 != 1) throw InvalidParameters("asq14 construction needs q = 1 mod 4");
  Unital un = square_unital(ctx, b1);
  const Fq2 e = ctx.e(), B1(b1);
  const Fq i = sqrt(-ctx.one());
  std::uint64_t tried = 0;
  for (Fq h2 : ctx.units_q()) {
    if (is_square(h2)) continue;
    if ((h2 + ctx.one()).is_zero()) throw InvariantViolation("non-square h^2 equals -1 although -1 is a square");
    for (Fq2 h : sqrt_all(Fq2(h2))) {
      const Fq2 k0 = -B1 * e * h;
      if (!k0.in_base_field()) throw InvariantViolation("b1 e h is not in GF(q)");
      const Fq2 k = k0 + B1 * e;
      for (Fq sigma : {i, -i}) {
        ++tried;
        const Fq t = ctx.fq_int(2) * h2 * (sigma - ctx.one()) / (h2 + ctx.one());
        const Fq s = sigma * t;
        TripleOnanParams p{ctx.one2(), un.b(), ctx.one2() / k, k, h, s, t};
        if (params_ok(p) && check_equations(p).all()) return finish("asq14", p, tried);
      }
    }
  }
  return std::nullopt;
}

Q3Result q3_construction(const FieldCtx& ctx, Fq b1) {
  if (ctx.q() % 4 != 3) throw InvalidParameters("q3asq construction needs q = 3 mod 4");
  Unital un = square_unital(ctx, b1);
  Q3Result res;
  const Fq one = ctx.one();
  std::vector<std::pair<Fq, Fq>> solutions;
  for (Fq X : ctx.units_q()) {
    if ((X + one).is_zero()) continue;
    for (Fq Y : ctx.units_q()) {
      if ((Y + one).is_zero()) continue;
      const bool x_same = is_square(X) == is_square(X + one);
      const bool y_diff = is_square(Y) != is_square(Y + one);
      if (x_same && y_diff) ++res.type_compatible_pairs;
      if (X * (X + one) == -(Y * (Y + one))) solutions.emplace_back(X, Y);
    }
  }
  res.solution_pairs = solutions.size();

  const Fq2 e = ctx.e(), B1(b1);
  std::uint64_t tried = 0;
  for (Fq2 theta : sqrt_all(e)) {
    const Fq r = norm(theta);
    if (!(r * r == -ctx.w())) throw InvariantViolation("theta^(q+1) is not a square root of -w");
    const Fq2 R(r);
    const Fq2 h = e / R;
    const Fq2 k = R * (-ctx.one2() + B1 * R) + (ctx.one2() + B1 * R) * e;
    if (k.is_zero()) continue;
    const Fq2 x = theta / k;
    for (auto [X, Y] : solutions) {
      ++tried;
      const Fq s = ctx.fq_int(2) * r * X, t = ctx.fq_int(2) * r * Y;
      if (s * s == t * t) continue;
      TripleOnanParams p{ctx.one2(), un.b(), x, k, h, s, t};
      if (params_ok(p) && check_equations(p).all()) {
        res.construction = finish("q3asq", p, tried);
        return res;
      }
    }
  }
  return res;
}

// ----------------------------------------------------------------- transfer

TransferResult transfer_b(const TripleOnanParams& src, Fq b2) {
  const FieldCtx& c = src.ctx();
  if (!src.b.c0().is_zero()) throw InvalidParameters("transfer needs b of the form b1 e");
  const Fq b1 = src.b.c1();
  const Fq2 b2e = Fq2(b2) * c.e();
  if (!try_validate(src.a, b2e)) throw InvalidParameters("(a, b2 e) is not a valid unital");

  const Fq2 xk = src.x * src.k;
  const Fq2 delta = src.a * xk * xk;
  const Fq theta = norm(xk);
  const Fq d1 = (b1 - b2) * theta;
  const Fq h0 = src.h.c0(), h1 = src.h.c1();
  Fq d0 = c.zero();
  if (!h1.is_zero()) {
    d0 = (d1 * norm(src.h) - h0 * d1) / h1;
  } else if (!d1.is_zero()) {
    throw InvariantViolation("transfer: h in GF(q) leaves the linear system without a solution");
  }
  const Fq2 m = src.k - c.fq2(d0, d1);
  if (m.is_zero()) throw InvariantViolation("transfer: m = 0");
  const Fq2 y2 = delta / (src.a * m * m);
  if (!is_square(y2)) throw InvariantViolation("transfer: Delta/(a m^2) is a non-square");
  const Fq2 y = sqrt(y2);

  TransferResult out{TripleOnanParams{src.a, b2e, y, m, src.h, src.s, src.t}, TransferWitness{m, y}};
  if (!params_ok(out.params) || !check_equations(out.params).all())
    throw InvariantViolation("transfer: transferred parameters fail the membership equations");
  return out;
}

}  // namespace unital_lab
