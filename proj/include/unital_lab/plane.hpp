#pragma once

// PG(2, q^2) with homogeneous coordinates over GF(q^2).

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "unital_lab/gfield.hpp"

namespace unital_lab {

/// A point, scaled so that its last nonzero coordinate is 1.
struct ProjPoint {
  Fq2 x, y, z;

  const FieldCtx& ctx() const { return x.ctx(); }
  bool is_affine() const { return !z.is_zero(); }
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

/// A line [l0, l1, l2]: the points with l0 x + l1 y + l2 z = 0. Same
/// normalization as points.
struct ProjLine {
  Fq2 l0, l1, l2;

  const FieldCtx& ctx() const { return l0.ctx(); }
  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

/// Normalized point; throws Degenerate for (0,0,0).
ProjPoint make_point(Fq2 x, Fq2 y, Fq2 z);
ProjLine make_line(Fq2 l0, Fq2 l1, Fq2 l2);
inline ProjPoint affine_point(Fq2 x, Fq2 y) { return {x, y, y.ctx().one2()}; }

ProjLine join(const ProjPoint& p, const ProjPoint& q);
ProjPoint meet(const ProjLine& l, const ProjLine& m);
bool incident(const ProjLine& l, const ProjPoint& p);
bool collinear(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c);
bool concurrent(const ProjLine& a, const ProjLine& b, const ProjLine& c);

/// Dense index in [0, q^4 + q^2 + 1): affine (x,y,1) first, then (x,1,0), then (1,0,0).
std::uint64_t point_index(const ProjPoint& p);
std::uint64_t line_index(const ProjLine& l);
ProjPoint point_from_index(const FieldCtx& ctx, std::uint64_t index);
ProjLine line_from_index(const FieldCtx& ctx, std::uint64_t index);
std::uint64_t plane_size(const FieldCtx& ctx);

/// All q^2 + 1 points of a line, in parametrized order.
std::vector<ProjPoint> points_on_line(const ProjLine& l);

inline ProjPoint special_point(const FieldCtx& c) { return {c.zero2(), c.one2(), c.zero2()}; }
inline ProjLine line_at_infinity(const FieldCtx& c) { return {c.zero2(), c.zero2(), c.one2()}; }

std::ostream& operator<<(std::ostream& os, const ProjPoint& p);
std::ostream& operator<<(std::ostream& os, const ProjLine& l);

/// 3x3 matrix over GF(q^2) acting on column vectors of homogeneous point
/// coordinates.
class Collineation {
 public:
  using Matrix = std::array<Fq2, 9>;

  explicit Collineation(const Matrix& m);
  static Collineation identity(const FieldCtx& ctx);

  const Matrix& matrix() const { return m_; }
  Fq2 operator()(int r, int c) const { return m_[static_cast<std::size_t>(3 * r + c)]; }

  ProjPoint apply(const ProjPoint& p) const;
  /// Image of a line: the line through the images of its points.
  ProjLine apply(const ProjLine& l) const;
  /// (*this) after `inner`.
  Collineation compose(const Collineation& inner) const;

 private:
  Matrix m_;
  Matrix adj_;  // adjugate; rows act on line coordinates
};

}  // namespace unital_lab

template <>
struct std::hash<unital_lab::ProjPoint> {
  std::size_t operator()(const unital_lab::ProjPoint& p) const noexcept {
    return std::hash<std::uint64_t>{}(unital_lab::point_index(p));
  }
};

template <>
struct std::hash<unital_lab::ProjLine> {
  std::size_t operator()(const unital_lab::ProjLine& l) const noexcept {
    return std::hash<std::uint64_t>{}(unital_lab::line_index(l));
  }
};
