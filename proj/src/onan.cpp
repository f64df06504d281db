#include "unital_lab/onan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace unital_lab {

ConfigId TripleOnanConfig::id() const {
  ConfigId id;
  for (std::size_t i = 0; i < 6; ++i) id[i] = line_index(lines[i]);
  std::sort(id.begin(), id.end());
  return id;
}

OnanId OnanConfig::id() const {
  OnanId id;
  for (std::size_t i = 0; i < 4; ++i) id[i] = line_index(lines[i]);
  std::sort(id.begin(), id.end());
  return id;
}

bool params_ok(const TripleOnanParams& p) {
  if (p.x.is_zero() || p.k.is_zero() || p.h.is_zero()) return false;
  if (p.s.is_zero() || p.t.is_zero() || p.s == p.t) return false;
  if (p.h == p.ctx().one2()) return false;
  if ((Fq2(p.s) - Fq2(p.t) * p.h).is_zero()) return false;
  if ((Fq2(p.t) - Fq2(p.s) * p.h).is_zero()) return false;
  return true;
}

void check_params(const TripleOnanParams& p) {
  if (!params_ok(p)) throw InvalidParameters("frame parameters violate x,k,h,s,t != 0, s != t, h != 1, s != th, t != sh");
}

FrameCoefficients wuvz(Fq2 h, Fq s, Fq t) {
  const Fq2 one = h.ctx().one2();
  Fq2 ds = Fq2(s) - Fq2(t) * h;
  Fq2 dt = Fq2(t) - Fq2(s) * h;
  if (ds.is_zero() || dt.is_zero()) throw Degenerate("s - th or t - sh vanishes");
  Fq2 st(s * t);
  return {h * Fq2(s - t) / ds, st * (one - h) / ds, h * Fq2(t - s) / dt, st * (one - h) / dt};
}

namespace {

int count_through(const std::array<ProjLine, 6>& lines, const ProjPoint& pt) {
  int n = 0;
  for (const auto& l : lines)
    if (incident(l, pt)) ++n;
  return n;
}

std::array<ProjLine, 6> frame_lines(const SevenPoints& s) {
  return {join(s.P, s.X), join(s.Y, s.Q), join(s.P, s.Y), join(s.X, s.Q), join(s.P, s.Q), join(s.Y, s.X)};
}

// a X^2 - a^q X^2q + (b - b^q) X^(q+1) == Y - Y^q
bool membership_equation(Fq2 a, Fq2 b, Fq2 xc, Fq2 yc) {
  Fq2 ax2 = a * xc * xc;
  Fq2 lhs = ax2 - frobenius(ax2) + (b - frobenius(b)) * Fq2(norm(xc));
  return lhs == yc - frobenius(yc);
}

}  // namespace

TripleOnanConfig realize(const TripleOnanParams& p) {
  check_params(p);
  const FieldCtx& c = p.ctx();
  const Fq2 o = c.zero2();
  Fq2 j = p.j();
  SevenPoints s;
  s.P = affine_point(p.x * j, j);
  s.Q = affine_point(p.x * p.k, p.k);
  s.X = affine_point(o, Fq2(p.s));
  s.Y = affine_point(o, Fq2(p.t));
  s.V = affine_point(o, o);
  s.M = meet(join(s.P, s.X), join(s.Q, s.Y));
  s.N = meet(join(s.P, s.Y), join(s.Q, s.X));
  TripleOnanConfig cfg;
  cfg.points = s;
  cfg.lines = frame_lines(s);
  cfg.bm_special = count_through(cfg.lines, special_point(c)) == 1;
  return cfg;
}

EquationCheck check_equations(const TripleOnanParams& p) {
  const Fq2 a = p.a, b = p.b, xk = p.x * p.k;
  auto co = wuvz(p.h, p.s, p.t);
  EquationCheck r;
  r.holds[0] = membership_equation(a, b, xk, p.k);
  r.holds[1] = membership_equation(a, b, xk * p.h, p.k * p.h);
  r.holds[2] = membership_equation(a, b, xk * co.w, p.k * co.w + co.u);
  r.holds[3] = membership_equation(a, b, xk * co.v_hat, p.k * co.v_hat + co.z_hat);
  return r;
}

EquationCheck check_equations_boxed(const TripleOnanParams& p) {
  const Fq2 xk = p.x * p.k;
  const Fq2 delta = p.a * xk * xk;
  const Fq2 theta(norm(xk));
  const Fq2 bb = p.b - frobenius(p.b);
  const Fq2 h = p.h, k = p.k;
  auto co = wuvz(h, p.s, p.t);
  EquationCheck r;
  r.holds[0] = box(delta) + bb * theta == box(k);
  r.holds[1] = box(delta * h * h) + bb * theta * Fq2(norm(h)) == box(k * h);
  r.holds[2] = box(delta * co.w * co.w) + bb * theta * Fq2(norm(co.w)) == box(k * co.w) + box(co.u);
  r.holds[3] = box(delta * co.v_hat * co.v_hat) + bb * theta * Fq2(norm(co.v_hat)) == box(k * co.v_hat) + box(co.z_hat);
  return r;
}

TripleOnanVerdict verify_quadrangle(const Unital& u, const ProjPoint& P, const ProjPoint& Q, const ProjPoint& X,
                                    const ProjPoint& Y) {
  TripleOnanVerdict v;
  const std::array<ProjPoint, 4> quad{P, Q, X, Y};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (quad[i] == quad[j]) {
        v.problems.emplace_back("quadrangle points coincide");
        return v;
      }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (collinear(quad[i], quad[j], quad[k])) {
          v.problems.emplace_back("three quadrangle points are collinear");
          return v;
        }
  SevenPoints s{P, Q, X, Y, meet(join(P, Q), join(X, Y)), meet(join(P, X), join(Q, Y)), meet(join(P, Y), join(Q, X))};
  return verify_triple_onan(u, s);
}

TripleOnanVerdict verify_triple_onan(const Unital& u, const SevenPoints& s) {
  TripleOnanVerdict v;
  const std::array<ProjPoint, 4> quad{s.P, s.Q, s.X, s.Y};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (collinear(quad[i], quad[j], quad[k])) {
          v.problems.emplace_back("P, Q, X, Y do not form a quadrangle");
          return v;
        }
  if (!(meet(join(s.P, s.Q), join(s.X, s.Y)) == s.V)) v.problems.emplace_back("V is not PQ.XY");
  if (!(meet(join(s.P, s.X), join(s.Q, s.Y)) == s.M)) v.problems.emplace_back("M is not PX.QY");
  if (!(meet(join(s.P, s.Y), join(s.Q, s.X)) == s.N)) v.problems.emplace_back("N is not PY.QX");

  const std::array<std::pair<const char*, ProjPoint>, 7> named{
      {{"P", s.P}, {"Q", s.Q}, {"X", s.X}, {"Y", s.Y}, {"V", s.V}, {"M", s.M}, {"N", s.N}}};
  std::set<std::uint64_t> distinct;
  const ProjPoint T = u.special();
  for (const auto& [name, pt] : named) {
    distinct.insert(point_index(pt));
    if (!u.contains(pt)) v.problems.push_back(std::string(name) + " is not a unital point");
    if (pt == T) v.problems.push_back(std::string(name) + " is the special point");
  }
  if (distinct.size() != 7) v.problems.emplace_back("the seven points are not distinct");
  if (!v.problems.empty()) return v;

  TripleOnanConfig cfg;
  cfg.points = s;
  cfg.lines = frame_lines(s);
  std::set<std::uint64_t> line_ids;
  for (const auto& l : cfg.lines) line_ids.insert(line_index(l));
  if (line_ids.size() != 6) v.problems.emplace_back("the six lines are not distinct");
  v.lines_through_special = count_through(cfg.lines, T);
  if (v.lines_through_special > 1) v.problems.emplace_back("more than one line through the special point");
  for (const OnanConfig& sub : sub_onans(cfg))
    if (!verify_onan(u, sub.lines).valid) v.problems.emplace_back("a sub-configuration is not an O'Nan");
  if (!v.problems.empty()) return v;

  cfg.bm_special = v.lines_through_special == 1;
  v.valid = true;
  v.bm_special = cfg.bm_special;
  v.config = cfg;
  return v;
}

OnanVerdict verify_onan(const Unital& u, const std::array<ProjLine, 4>& lines) {
  OnanVerdict v;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (lines[i] == lines[j]) {
        v.problem = "lines are not distinct";
        return v;
      }
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      for (std::size_t k = j + 1; k < 4; ++k)
        if (concurrent(lines[i], lines[j], lines[k])) {
          v.problem = "three lines are concurrent";
          return v;
        }
  OnanConfig cfg;
  cfg.lines = lines;
  std::size_t n = 0;
  std::set<std::uint64_t> distinct;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      cfg.points[n] = meet(lines[i], lines[j]);
      distinct.insert(point_index(cfg.points[n]));
      if (!u.contains(cfg.points[n])) {
        v.problem = "an intersection point is not a unital point";
        return v;
      }
      ++n;
    }
  if (distinct.size() != 6) {
    v.problem = "intersection points are not distinct";
    return v;
  }
  v.valid = true;
  v.config = cfg;
  return v;
}

std::array<OnanConfig, 3> sub_onans(const TripleOnanConfig& c) {
  const auto& s = c.points;
  const ProjLine PX = join(s.P, s.X), QY = join(s.Q, s.Y), PY = join(s.P, s.Y), QX = join(s.Q, s.X);
  const ProjLine PQ = join(s.P, s.Q), XY = join(s.X, s.Y);
  auto build = [](std::array<ProjLine, 4> ls) {
    OnanConfig o;
    o.lines = ls;
    std::size_t n = 0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j) o.points[n++] = meet(ls[i], ls[j]);
    return o;
  };
  return {build({PX, QY, PY, QX}), build({PX, QY, PQ, XY}), build({PY, QX, PQ, XY})};
}

namespace {

// Opposite pairs of the six O'Nan points: meets (0,1)|(2,3), (0,2)|(1,3), (0,3)|(1,2).
constexpr std::array<std::array<std::size_t, 2>, 3> kOpposite{{{0, 5}, {1, 4}, {2, 3}}};

}  // namespace

std::array<ProjPoint, 3> completion_points(const OnanConfig& c) {
  std::array<ProjPoint, 3> out;
  for (std::size_t ex = 0; ex < 3; ++ex) {
    std::array<std::size_t, 2> keep{};
    std::size_t n = 0;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != ex) keep[n++] = k;
    const auto& A = kOpposite[keep[0]];
    const auto& B = kOpposite[keep[1]];
    out[ex] = meet(join(c.points[A[0]], c.points[A[1]]), join(c.points[B[0]], c.points[B[1]]));
  }
  return out;
}

std::vector<TripleOnanConfig> extend_onan(const Unital& u, const OnanConfig& c) {
  std::vector<TripleOnanConfig> out;
  for (std::size_t ex = 0; ex < 3; ++ex) {
    std::array<std::size_t, 2> keep{};
    std::size_t n = 0;
    for (std::size_t k = 0; k < 3; ++k)
      if (k != ex) keep[n++] = k;
    const auto& A = kOpposite[keep[0]];
    const auto& B = kOpposite[keep[1]];
    auto verdict = verify_quadrangle(u, c.points[A[0]], c.points[A[1]], c.points[B[0]], c.points[B[1]]);
    if (verdict.valid) out.push_back(*verdict.config);
  }
  return out;
}

FengLiResult feng_li_onan(const Unital& u, Fq lambda1, Fq lambda2) {
  const FieldCtx& c = u.ctx();
  FengLiResult res;
  res.lambda1 = lambda1;
  res.lambda2 = lambda2;
  if (lambda1 == lambda2) {
    res.reason = "lambda1 = lambda2";
    return res;
  }
  const Fq2 a = u.a(), b = u.b();
  auto x_of = [&](Fq lambda) -> std::optional<Fq2> {
    Fq2 cl = Fq2(lambda) - b;
    Fq2 den = Fq2(norm(a)) - Fq2(norm(cl));
    if (den.is_zero()) return std::nullopt;
    return (frobenius(a) + cl) / den;
  };
  res.x1 = x_of(lambda1);
  res.x2 = x_of(lambda2);
  if (!res.x1 || !res.x2) {
    res.reason = "a^(q+1) - (lambda - b)^(q+1) vanishes";
    return res;
  }
  const Fq2 x1 = *res.x1, x2 = *res.x2;
  if ((x1 + x2).is_zero()) {
    res.reason = "x1 + x2 = 0, r undefined";
    return res;
  }
  if (x1.is_zero() || x2.is_zero() || x1 == x2) {
    res.reason = "construction points coincide";
    return res;
  }
  res.r = Fq2(c.fq_int(2)) * x1 * x2 / (x1 + x2);
  const ProjPoint P1 = affine_point(-x1, x1), P2 = affine_point(-x2, x2);
  const ProjPoint P1s = affine_point(x1, x1), P2s = affine_point(x2, x2);
  std::array<ProjLine, 4> lines{join(P1, P2), join(P1s, P2s), join(P1, P2s), join(P1s, P2)};
  auto verdict = verify_onan(u, lines);
  if (!verdict.valid) {
    res.reason = verdict.problem;
    return res;
  }
  if (!(verdict.config->points[5] == affine_point(c.zero2(), *res.r)))
    throw InvariantViolation("Feng-Li: l' . l'' differs from (0, r, 1)");
  res.onan = verdict.config;
  return res;
}

FengLiDiagonals fl_diagonals(const Unital& u, const FengLiResult& res) {
  if (!res.onan) throw InvalidParameters("fl_diagonals needs a Feng-Li O'Nan");
  const FieldCtx& c = u.ctx();
  const auto& pts = res.onan->points;
  const ProjPoint &P = pts[0], &P1 = pts[1], &P2 = pts[2], &P2s = pts[3], &P1s = pts[4], &R = pts[5];
  FengLiDiagonals d;
  d.points[0] = meet(join(P1, P1s), join(P2, P2s));
  d.points[1] = meet(join(P, R), join(P1, P1s));
  d.points[2] = meet(join(P, R), join(P2, P2s));
  for (std::size_t i = 0; i < 3; ++i) d.in_unital[i] = u.contains(d.points[i]);
  const Fq2 o = c.zero2(), i1 = c.one2();
  d.closed_forms_match = d.points[0] == ProjPoint{i1, o, o} && d.points[1] == affine_point(o, *res.x1) &&
                         d.points[2] == affine_point(o, *res.x2);
  return d;
}

FengLiScan feng_li_scan(const Unital& u) {
  FengLiScan scan;
  std::map<OnanId, FengLiResult> seen;
  for (Fq l1 : u.ctx().elements_q())
    for (Fq l2 : u.ctx().elements_q()) {
      if (l1 == l2) continue;
      ++scan.ordered_pairs_tried;
      auto res = feng_li_onan(u, l1, l2);
      if (!res.onan) continue;
      ++scan.ordered_hits;
      seen.try_emplace(res.onan->id(), res);
    }
  for (auto& [id, res] : seen) scan.configs.push_back(res);
  std::sort(scan.configs.begin(), scan.configs.end(), [](const FengLiResult& x, const FengLiResult& y) {
    return std::pair(x.lambda1, x.lambda2) < std::pair(y.lambda1, y.lambda2);
  });
  return scan;
}

FPointReport f_point(const Unital& u, const TripleOnanParams& p) {
  const FieldCtx& c = u.ctx();
  TripleOnanConfig cfg = realize(p);
  const auto& s = cfg.points;
  FPointReport r;
  r.mn = join(s.M, s.N);
  r.F = meet(r.mn, join(s.X, s.Y));
  r.in_unital = u.contains(r.F);

  const Fq2 h = p.h, k = p.k, x = p.x, one = c.one2();
  const Fq2 sum(p.s + p.t), prod(p.s * p.t), two(c.fq_int(2));
  ProjLine closed = make_line(k * h * sum - (one + h) * prod, -k * x * h * sum, two * k * x * h * prod);
  r.mn_matches_closed_form = closed == r.mn;

  if (!sum.is_zero()) {
    r.f_closed_form = to_base(two * prod / sum);
    r.f_matches = r.F == affine_point(c.zero2(), Fq2(*r.f_closed_form));
  } else {
    r.f_matches = r.F == u.special();
  }
  return r;
}

EPointRow e_point(const Unital& u, const TripleOnanParams& p) {
  const FieldCtx& c = u.ctx();
  TripleOnanConfig cfg = realize(p);
  const auto& s = cfg.points;
  EPointRow row;
  row.q = c.q();
  row.a_square = is_square(u.a());
  row.degenerate = (p.h + c.one2()).is_zero();
  row.E = meet(join(s.M, s.N), join(s.P, s.Q));
  row.affine = row.E.is_affine();
  row.in_unital = u.contains(row.E);
  const Fq2 m = Fq2(c.fq_int(2)) * p.k * p.h;
  row.closed_form_match = row.E == make_point(m * p.x, m, p.h + c.one2());
  return row;
}

std::vector<EPointRow> e_point_experiment(const Unital& u, const std::vector<TripleOnanParams>& configs) {
  std::vector<EPointRow> rows;
  rows.reserve(configs.size());
  for (const auto& p : configs) rows.push_back(e_point(u, p));
  return rows;
}

}  // namespace unital_lab
