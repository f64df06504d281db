#include "unital_lab/json_io.hpp"

#include <array>
#include <string>

namespace unital_lab {

namespace {

const std::array<const char*, 6> kLineNames{"PXM", "YQM", "PYN", "XQN", "PVQ", "YVX"};

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidParameters("json: " + what);
}

std::uint32_t checked_index(const json& j, std::uint32_t bound, const char* what) {
  require(j.is_number_unsigned() || (j.is_number_integer() && j.get<std::int64_t>() >= 0),
          std::string(what) + " must be a non-negative integer");
  auto v = j.get<std::uint64_t>();
  require(v < bound, std::string(what) + " out of range");
  return static_cast<std::uint32_t>(v);
}

}  // namespace

json ctx_header(const FieldCtx& ctx) {
  return json{{"p", ctx.p()},
              {"exp", ctx.exp()},
              {"q", ctx.q()},
              {"modulus", ctx.modulus()},
              {"w", ctx.w().index()},
              {"e", to_json(ctx.e())},
              {"g", to_json(ctx.g())},
              {"fq_encoding", ctx.exp() == 1 ? "integer mod p" : "base-p digits, constant term first"}};
}

CtxPtr ctx_from_header(const json& j) {
  require(j.is_object() && j.contains("p") && j.contains("exp"), "header needs p and exp");
  CtxPtr ctx = FieldCtx::make(j.at("p").get<std::uint32_t>(), j.at("exp").get<std::uint32_t>());
  if (j.contains("q")) require(j.at("q").get<std::uint32_t>() == ctx->q(), "q disagrees with p^exp");
  if (j.contains("modulus"))
    require(j.at("modulus").get<std::vector<std::uint32_t>>() == ctx->modulus(), "modulus disagrees");
  if (j.contains("w")) require(j.at("w").get<std::uint32_t>() == ctx->w().index(), "w disagrees");
  if (j.contains("g")) require(fq2_from_json(*ctx, j.at("g")) == ctx->g(), "g disagrees");
  return ctx;
}

json to_json(Fq x) { return x.index(); }
json to_json(Fq2 x) { return json::array({x.c0().index(), x.c1().index()}); }

Fq fq_from_json(const FieldCtx& ctx, const json& j) { return ctx.fq(checked_index(j, ctx.q(), "GF(q) element")); }

Fq2 fq2_from_json(const FieldCtx& ctx, const json& j) {
  require(j.is_array() && j.size() == 2, "GF(q^2) element must be [c0, c1]");
  return ctx.fq2(checked_index(j[0], ctx.q(), "c0"), checked_index(j[1], ctx.q(), "c1"));
}

json to_json(const ProjPoint& p) { return json{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"z", to_json(p.z)}}; }
json to_json(const ProjLine& l) { return json::array({to_json(l.l0), to_json(l.l1), to_json(l.l2)}); }

ProjPoint point_from_json(const FieldCtx& ctx, const json& j) {
  require(j.is_object() && j.contains("x") && j.contains("y") && j.contains("z"), "point needs x, y, z");
  ProjPoint p = make_point(fq2_from_json(ctx, j.at("x")), fq2_from_json(ctx, j.at("y")), fq2_from_json(ctx, j.at("z")));
  return p;
}

ProjLine line_from_json(const FieldCtx& ctx, const json& j) {
  require(j.is_array() && j.size() == 3, "line must be [l0, l1, l2]");
  return make_line(fq2_from_json(ctx, j[0]), fq2_from_json(ctx, j[1]), fq2_from_json(ctx, j[2]));
}

json to_json(const UnitalParams& p) {
  return json{{"a", to_json(p.a)},           {"b", to_json(p.b)},         {"d", to_json(p.d)},
              {"classical", p.classical},    {"conic", p.conic},          {"a_square", p.a_square}};
}

UnitalParams unital_params_from_json(const FieldCtx& ctx, const json& j) {
  return validate(fq2_from_json(ctx, j.at("a")), fq2_from_json(ctx, j.at("b")));
}

json to_json(const TripleOnanParams& p) {
  return json{{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"x", to_json(p.x)}, {"k", to_json(p.k)},
              {"h", to_json(p.h)}, {"s", to_json(p.s)}, {"t", to_json(p.t)}};
}

TripleOnanParams triple_params_from_json(const FieldCtx& ctx, const json& j) {
  TripleOnanParams p{fq2_from_json(ctx, j.at("a")), fq2_from_json(ctx, j.at("b")), fq2_from_json(ctx, j.at("x")),
                     fq2_from_json(ctx, j.at("k")), fq2_from_json(ctx, j.at("h")), fq_from_json(ctx, j.at("s")),
                     fq_from_json(ctx, j.at("t"))};
  check_params(p);
  return p;
}

json config_to_json(const Unital& u, const TripleOnanConfig& c) {
  const FieldCtx& ctx = u.ctx();
  const SevenPoints& s = c.points;
  json lines = json::array();
  for (std::size_t i = 0; i < 6; ++i) lines.push_back(json{{"name", kLineNames[i]}, {"coords", to_json(c.lines[i])}});
  return json{{"q", ctx.q()},
              {"p", ctx.p()},
              {"exp", ctx.exp()},
              {"a", to_json(u.a())},
              {"b", to_json(u.b())},
              {"points",
               {{"P", to_json(s.P)},
                {"Q", to_json(s.Q)},
                {"X", to_json(s.X)},
                {"Y", to_json(s.Y)},
                {"V", to_json(s.V)},
                {"M", to_json(s.M)},
                {"N", to_json(s.N)}}},
              {"lines", lines},
              {"bm_special", c.bm_special}};
}

TripleOnanConfig config_from_json(const FieldCtx& ctx, const json& j) {
  require(j.is_object() && j.contains("points") && j.contains("lines"), "configuration needs points and lines");
  require(j.at("q").get<std::uint32_t>() == ctx.q(), "configuration q disagrees with the context");
  const json& pts = j.at("points");
  auto pt = [&](const char* name) { return point_from_json(ctx, pts.at(name)); };
  TripleOnanConfig c;
  c.points = SevenPoints{pt("P"), pt("Q"), pt("X"), pt("Y"), pt("V"), pt("M"), pt("N")};
  const SevenPoints& s = c.points;
  c.lines = {join(s.P, s.X), join(s.Y, s.Q), join(s.P, s.Y), join(s.X, s.Q), join(s.P, s.Q), join(s.Y, s.X)};
  const json& ls = j.at("lines");
  require(ls.is_array() && ls.size() == 6, "configuration needs six lines");
  for (std::size_t i = 0; i < 6; ++i) {
    require(ls[i].at("name").get<std::string>() == kLineNames[i], "line names out of order");
    require(line_from_json(ctx, ls[i].at("coords")) == c.lines[i],
            std::string("line ") + kLineNames[i] + " does not pass through its points");
  }
  c.bm_special = j.at("bm_special").get<bool>();
  return c;
}

json onan_to_json(const Unital& u, const OnanConfig& c) {
  const FieldCtx& ctx = u.ctx();
  json lines = json::array(), pts = json::array();
  for (const auto& l : c.lines) lines.push_back(to_json(l));
  for (const auto& p : c.points) pts.push_back(to_json(p));
  return json{{"q", ctx.q()}, {"p", ctx.p()},   {"exp", ctx.exp()}, {"a", to_json(u.a())},
              {"b", to_json(u.b())}, {"lines", lines}, {"points", pts}};
}

OnanConfig onan_from_json(const FieldCtx& ctx, const json& j) {
  require(j.at("q").get<std::uint32_t>() == ctx.q(), "O'Nan q disagrees with the context");
  const json& ls = j.at("lines");
  require(ls.is_array() && ls.size() == 4, "O'Nan needs four lines");
  OnanConfig c;
  for (std::size_t i = 0; i < 4; ++i) c.lines[i] = line_from_json(ctx, ls[i]);
  std::size_t n = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = i + 1; k < 4; ++k) c.points[n++] = meet(c.lines[i], c.lines[k]);
  if (j.contains("points")) {
    const json& ps = j.at("points");
    require(ps.is_array() && ps.size() == 6, "O'Nan needs six points");
    for (std::size_t i = 0; i < 6; ++i)
      require(point_from_json(ctx, ps[i]) == c.points[i], "O'Nan point is not the meet of its lines");
  }
  return c;
}

json to_json(const SearchReport& r) {
  return json{{"q", r.q},
              {"a", to_json(r.a)},
              {"b", to_json(r.b)},
              {"a_character", r.a_square ? "square" : "non-square"},
              {"tuples", r.tuples},
              {"canonical_configurations", r.configurations},
              {"total_configurations", r.total},
              {"wall_ms", r.wall_ms},
              {"threads", r.threads},
              {"bounds",
               {{"x_values", r.x_values}, {"kj_pairs", r.kj_pairs}, {"st_pairs", r.st_pairs}, {"tested", r.tested}}}};
}

json to_json(const CyclotomicTable& t) {
  return json{{"q", t.q}, {"order", t.order}, {"w", to_json(t.w)}, {"counts", t.counts}, {"total", t.total()}};
}

json to_json(const TripleOnanVerdict& v) {
  return json{{"valid", v.valid},
              {"bm_special", v.bm_special},
              {"lines_through_special", v.lines_through_special},
              {"problems", v.problems}};
}

}  // namespace unital_lab
