#include "unital_lab/unital.hpp"

#include <numeric>
#include <string>

namespace unital_lab {

Fq discriminant(Fq2 a, Fq2 b) {
  Fq2 bb = b - frobenius(b);
  Fq2 d = bb * bb + Fq2(a.ctx().fq_int(4)) * Fq2(norm(a));
  return to_base(d);
}

std::optional<UnitalParams> try_validate(Fq2 a, Fq2 b) {
  Fq d = discriminant(a, b);
  if (d.is_zero() || is_square(d)) return std::nullopt;
  UnitalParams p;
  p.a = a;
  p.b = b;
  p.d = d;
  p.classical = a.is_zero();
  p.conic = b.is_zero();
  p.a_square = is_square(a);
  return p;
}

UnitalParams validate(Fq2 a, Fq2 b) {
  if (auto p = try_validate(a, b)) return *p;
  Fq d = discriminant(a, b);
  throw InvalidParameters(std::string("discriminant d = ") + std::to_string(d.index()) +
                          (d.is_zero() ? " is zero" : " is a square in GF(q)"));
}

std::vector<Fq> valid_b1_values(Fq2 a) {
  std::vector<Fq> out;
  for (Fq b1 : a.ctx().units_q())
    if (try_validate(a, Fq2(b1) * a.ctx().e())) out.push_back(b1);
  return out;
}

std::optional<Fq> least_valid_b1(Fq2 a) {
  for (Fq b1 : a.ctx().units_q())
    if (try_validate(a, Fq2(b1) * a.ctx().e())) return b1;
  return std::nullopt;
}

Unital::Unital(const UnitalParams& params) : params_(params) {
  const FieldCtx& c = ctx();
  offset_c1_.resize(c.q2());
  for (std::uint32_t i = 0; i < c.q2(); ++i) offset_c1_[i] = offset(c.fq2_index(i)).c1().index();
}

Fq2 Unital::offset(Fq2 x) const { return params_.a * x * x + params_.b * Fq2(norm(x)); }

bool Unital::contains(const ProjPoint& p) const {
  if (p.z.is_zero()) return p.x.is_zero();  // only T on the line at infinity
  return contains_affine(p.x, p.y);
}

std::vector<ProjPoint> Unital::enumerate_points() const {
  const FieldCtx& c = ctx();
  std::vector<ProjPoint> pts;
  pts.reserve(size());
  pts.push_back(special());
  for (Fq2 x : c.elements_q2()) {
    Fq2 base = offset(x);
    for (Fq r : c.elements_q()) pts.push_back(affine_point(x, base + r));
  }
  return pts;
}

std::size_t Unital::line_profile(const ProjLine& l) const {
  std::size_t n = 0;
  for (const ProjPoint& p : points_on_line(l))
    if (contains(p)) ++n;
  if (n != 1 && n != ctx().q() + 1)
    throw InvariantViolation("line meets the unital in " + std::to_string(n) + " points");
  return n;
}

std::map<std::size_t, std::uint64_t> Unital::line_census() const {
  std::map<std::size_t, std::uint64_t> hist;
  const std::uint64_t n = plane_size(ctx());
  for (std::uint64_t i = 0; i < n; ++i) ++hist[line_profile(line_from_index(ctx(), i))];
  return hist;
}

Collineation phi(const Unital& u, Fq t) {
  const FieldCtx& c = u.ctx();
  const Fq2 o = c.zero2(), i = c.one2();
  return Collineation({i, o, o, o, i, Fq2(t), o, o, i});
}

Collineation psi(const Unital& u, Fq2 gamma) {
  const FieldCtx& c = u.ctx();
  const Fq2 o = c.zero2(), i = c.one2();
  const Fq2 a = u.a(), b = u.b();
  const Fq2 two(c.fq_int(2));
  Fq2 m10 = two * a * gamma - (frobenius(b) - b) * frobenius(gamma);
  Fq2 m12 = a * gamma * gamma + b * Fq2(norm(gamma));
  return Collineation({i, o, gamma, m10, i, m12, o, o, i});
}

bool mu_domain_ok(const Unital& u, Fq2 delta) {
  if (delta.is_zero()) return false;
  if (u.b().in_base_field()) return (delta * delta).in_base_field();
  return delta.in_base_field();
}

Collineation mu(const Unital& u, Fq2 delta) {
  if (!mu_domain_ok(u, delta))
    throw InvalidParameters(u.b().in_base_field() ? "mu: delta^2 must lie in GF(q)^*" : "mu: delta must lie in GF(q)^*");
  const FieldCtx& c = u.ctx();
  const Fq2 o = c.zero2(), i = c.one2();
  return Collineation({delta, o, o, o, delta * delta, o, o, o, i});
}

Collineation translation(const Unital& u, Fq2 gamma, Fq t) { return psi(u, gamma).compose(phi(u, t)); }

Fq2 apply_tau(Fq2 x, std::uint32_t power) {
  std::int64_t e = 1;
  for (std::uint32_t i = 0; i < power; ++i) e *= x.ctx().p();
  return pow(x, e);
}

bool check_witness(Fq2 a, Fq2 b, Fq2 a2, Fq2 b2, const EquivalenceWitness& w) {
  if (w.v.is_zero() || w.gamma.is_zero()) return false;
  Fq2 ta = apply_tau(a, w.tau_power), tb = apply_tau(b, w.tau_power);
  return a2 == ta * w.gamma * w.gamma * Fq2(w.v) && b2 == tb * Fq2(norm(w.gamma)) * Fq2(w.v) + Fq2(w.u);
}

std::optional<EquivalenceWitness> equivalent_params(Fq2 a, Fq2 b, Fq2 a2, Fq2 b2) {
  const FieldCtx& c = a.ctx();
  for (std::uint32_t tau = 0; tau < 2 * c.exp(); ++tau) {
    Fq2 ta = apply_tau(a, tau), tb = apply_tau(b, tau);
    for (Fq2 gamma : c.units_q2()) {
      Fq2 g2 = gamma * gamma;
      Fq2 gn(norm(gamma));
      for (Fq v : c.units_q()) {
        if (!(a2 == ta * g2 * Fq2(v))) continue;
        Fq2 u = b2 - tb * gn * Fq2(v);
        if (u.in_base_field()) return EquivalenceWitness{v, gamma, u.c0(), tau};
      }
    }
  }
  return std::nullopt;
}

namespace {

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t x, std::uint32_t y) {
    x = find(x);
    y = find(y);
    if (x != y) parent[std::max(x, y)] = std::min(x, y);
  }
};

}  // namespace

std::vector<EquivalenceClass> equivalence_classes(const FieldCtx& c) {
  const std::uint64_t n2 = c.q2();
  if (n2 * n2 > (std::uint64_t{1} << 26)) throw ResourceCap("parameter space too large for class enumeration");
  auto pair_index = [&](Fq2 a, Fq2 b) { return static_cast<std::uint32_t>(std::uint64_t{a.index()} * n2 + b.index()); };

  // Generators of the transformation group.
  struct Gen {
    std::uint32_t tau;
    Fq2 gamma;
    Fq v;
    Fq u;
  };
  std::vector<Gen> gens;
  gens.push_back({0, c.g(), c.one(), c.zero()});
  gens.push_back({0, c.one2(), c.w(), c.zero()});
  for (std::uint32_t i = 0, pi = 1; i < c.exp(); ++i, pi *= c.p()) gens.push_back({0, c.one2(), c.one(), c.fq(pi)});
  gens.push_back({1, c.one2(), c.one(), c.zero()});

  std::vector<char> valid(n2 * n2, 0);
  DisjointSets sets(n2 * n2);
  for (Fq2 a : c.elements_q2())
    for (Fq2 b : c.elements_q2()) {
      if (!try_validate(a, b)) continue;
      valid[pair_index(a, b)] = 1;
      for (const Gen& g : gens) {
        Fq2 a2 = apply_tau(a, g.tau) * g.gamma * g.gamma * Fq2(g.v);
        Fq2 b2 = apply_tau(b, g.tau) * Fq2(norm(g.gamma)) * Fq2(g.v) + Fq2(g.u);
        sets.unite(pair_index(a, b), pair_index(a2, b2));
      }
    }

  std::map<std::uint32_t, EquivalenceClass> classes;
  for (std::uint32_t idx = 0; idx < n2 * n2; ++idx) {
    if (!valid[idx]) continue;
    Fq2 a = c.fq2_index(static_cast<std::uint32_t>(idx / n2));
    Fq2 b = c.fq2_index(static_cast<std::uint32_t>(idx % n2));
    auto [it, fresh] = classes.try_emplace(sets.find(idx));
    EquivalenceClass& cls = it->second;
    if (fresh) cls = EquivalenceClass{a, b, a.is_zero(), false, is_square(a), 0};
    if (b.is_zero()) cls.conic = true;
    ++cls.size;
  }
  std::vector<EquivalenceClass> out;
  for (auto& [root, cls] : classes) out.push_back(cls);
  return out;
}

}  // namespace unital_lab
