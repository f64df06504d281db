#include "unital_lab/plane.hpp"

#include <ostream>

namespace unital_lab {

namespace {

std::array<Fq2, 3> cross(Fq2 a0, Fq2 a1, Fq2 a2, Fq2 b0, Fq2 b1, Fq2 b2) {
  return {a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0};
}

std::array<Fq2, 3> normalized(Fq2 a, Fq2 b, Fq2 c) {
  if (!c.is_zero()) {
    Fq2 s = inverse(c);
    return {a * s, b * s, c.ctx().one2()};
  }
  if (!b.is_zero()) {
    Fq2 s = inverse(b);
    return {a * s, b.ctx().one2(), c};
  }
  if (!a.is_zero()) return {a.ctx().one2(), b, c};
  throw Degenerate("homogeneous triple (0,0,0)");
}

std::uint64_t triple_index(Fq2 a, Fq2 b, Fq2 c) {
  const std::uint64_t n = a.ctx().q2();
  if (!c.is_zero()) return std::uint64_t{a.index()} * n + b.index();
  if (!b.is_zero()) return n * n + a.index();
  return n * n + n;
}

std::array<Fq2, 3> triple_from_index(const FieldCtx& ctx, std::uint64_t index) {
  const std::uint64_t n = ctx.q2();
  if (index < n * n)
    return {ctx.fq2_index(static_cast<std::uint32_t>(index / n)), ctx.fq2_index(static_cast<std::uint32_t>(index % n)),
            ctx.one2()};
  if (index < n * n + n) return {ctx.fq2_index(static_cast<std::uint32_t>(index - n * n)), ctx.one2(), ctx.zero2()};
  if (index == n * n + n) return {ctx.one2(), ctx.zero2(), ctx.zero2()};
  throw InvalidParameters("plane index out of range");
}

}  // namespace

ProjPoint make_point(Fq2 x, Fq2 y, Fq2 z) {
  auto n = normalized(x, y, z);
  return {n[0], n[1], n[2]};
}

ProjLine make_line(Fq2 l0, Fq2 l1, Fq2 l2) {
  auto n = normalized(l0, l1, l2);
  return {n[0], n[1], n[2]};
}

ProjLine join(const ProjPoint& p, const ProjPoint& q) {
  if (p == q) throw Degenerate("join of a point with itself");
  auto c = cross(p.x, p.y, p.z, q.x, q.y, q.z);
  return make_line(c[0], c[1], c[2]);
}

ProjPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Degenerate("meet of a line with itself");
  auto c = cross(l.l0, l.l1, l.l2, m.l0, m.l1, m.l2);
  return make_point(c[0], c[1], c[2]);
}

bool incident(const ProjLine& l, const ProjPoint& p) { return (l.l0 * p.x + l.l1 * p.y + l.l2 * p.z).is_zero(); }

bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
  if (a == b || a == c || b == c) return true;
  return incident(join(a, b), c);
}

bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c) {
  if (a == b || a == c || b == c) return true;
  return incident(c, meet(a, b));
}

std::uint64_t point_index(const ProjPoint& p) { return triple_index(p.x, p.y, p.z); }
std::uint64_t line_index(const ProjLine& l) { return triple_index(l.l0, l.l1, l.l2); }

ProjPoint point_from_index(const FieldCtx& ctx, std::uint64_t index) {
  auto t = triple_from_index(ctx, index);
  return {t[0], t[1], t[2]};
}

ProjLine line_from_index(const FieldCtx& ctx, std::uint64_t index) {
  auto t = triple_from_index(ctx, index);
  return {t[0], t[1], t[2]};
}

std::uint64_t plane_size(const FieldCtx& ctx) {
  const std::uint64_t n = ctx.q2();
  return n * n + n + 1;
}

std::vector<ProjPoint> points_on_line(const ProjLine& l) {
  const FieldCtx& ctx = l.ctx();
  const Fq2 o = ctx.zero2(), i = ctx.one2();
  // Two distinct points of l from its meets with the coordinate lines.
  std::vector<ProjPoint> base;
  for (const ProjLine& axis : {ProjLine{i, o, o}, ProjLine{o, i, o}, ProjLine{o, o, i}}) {
    if (axis == l) continue;
    ProjPoint p = meet(l, axis);
    if (base.empty() || !(base.front() == p)) base.push_back(p);
    if (base.size() == 2) break;
  }
  const ProjPoint& a = base[0];
  const ProjPoint& b = base[1];
  std::vector<ProjPoint> pts;
  pts.reserve(ctx.q2() + 1);
  pts.push_back(b);
  for (std::uint32_t k = 0; k < ctx.q2(); ++k) {
    Fq2 t = ctx.fq2_index(k);
    pts.push_back(make_point(a.x + t * b.x, a.y + t * b.y, a.z + t * b.z));
  }
  return pts;
}

std::ostream& operator<<(std::ostream& os, const ProjPoint& p) { return os << '(' << p.x << ' ' << p.y << ' ' << p.z << ')'; }
std::ostream& operator<<(std::ostream& os, const ProjLine& l) { return os << '[' << l.l0 << ' ' << l.l1 << ' ' << l.l2 << ']'; }

Collineation::Collineation(const Matrix& m) : m_(m) {
  auto at = [&](int r, int c) { return m_[static_cast<std::size_t>(3 * r + c)]; };
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      // adj(r,c) = cofactor(c,r)
      int r0 = (c + 1) % 3, r1 = (c + 2) % 3, c0 = (r + 1) % 3, c1 = (r + 2) % 3;
      adj_[static_cast<std::size_t>(3 * r + c)] = at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0);
    }
  }
  Fq2 det = at(0, 0) * adj_[0] + at(0, 1) * adj_[3] + at(0, 2) * adj_[6];
  if (det.is_zero()) throw Degenerate("singular collineation matrix");
}

Collineation Collineation::identity(const FieldCtx& ctx) {
  const Fq2 o = ctx.zero2(), i = ctx.one2();
  return Collineation({i, o, o, o, i, o, o, o, i});
}

ProjPoint Collineation::apply(const ProjPoint& p) const {
  const auto& m = m_;
  return make_point(m[0] * p.x + m[1] * p.y + m[2] * p.z, m[3] * p.x + m[4] * p.y + m[5] * p.z,
                    m[6] * p.x + m[7] * p.y + m[8] * p.z);
}

ProjLine Collineation::apply(const ProjLine& l) const {
  const auto& a = adj_;
  return make_line(l.l0 * a[0] + l.l1 * a[3] + l.l2 * a[6], l.l0 * a[1] + l.l1 * a[4] + l.l2 * a[7],
                   l.l0 * a[2] + l.l1 * a[5] + l.l2 * a[8]);
}

Collineation Collineation::compose(const Collineation& inner) const {
  Matrix out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      Fq2 s = (*this)(r, 0) * inner(0, c);
      s += (*this)(r, 1) * inner(1, c);
      s += (*this)(r, 2) * inner(2, c);
      out[static_cast<std::size_t>(3 * r + c)] = s;
    }
  return Collineation(out);
}

}  // namespace unital_lab
