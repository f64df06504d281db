// unital_lab: command-line front end. Every command writes one JSON document.
//
// Exit codes: 0 success, 2 invalid parameters, 3 invariant violation,
// 4 resource cap, 1 anything else.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unital_lab/construct.hpp"
#include "unital_lab/errors.hpp"
#include "unital_lab/json_io.hpp"
#include "unital_lab/onan.hpp"
#include "unital_lab/search.hpp"
#include "unital_lab/unital.hpp"

using namespace unital_lab;

namespace {

struct RunConfig {
  std::string q = "";
  std::string a = "";
  std::string b = "auto";
  std::string a2, b2;
  std::string method;
  std::string out;
  unsigned order = 2;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t max_configs = 50;
  bool skip_census = false;
};

CtxPtr parse_q(const std::string& s) {
  if (s.empty()) throw InvalidParameters("--q is required");
  auto caret = s.find('^');
  try {
    if (caret == std::string::npos) return FieldCtx::for_order(std::stoull(s));
    return FieldCtx::make(static_cast<std::uint32_t>(std::stoul(s.substr(0, caret))),
                          static_cast<std::uint32_t>(std::stoul(s.substr(caret + 1))));
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidParameters*>(&e)) throw;
    throw InvalidParameters("cannot parse --q '" + s + "'");
  }
}

Fq2 parse_pair(const FieldCtx& ctx, const std::string& s, const char* flag) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidParameters(std::string(flag) + " expects c0,c1");
  try {
    auto c0 = std::stoul(s.substr(0, comma)), c1 = std::stoul(s.substr(comma + 1));
    if (c0 >= ctx.q() || c1 >= ctx.q()) throw InvalidParameters(std::string(flag) + " coordinates must be below q");
    return ctx.fq2(static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1));
  } catch (const std::invalid_argument&) {
    throw InvalidParameters(std::string(flag) + " expects c0,c1");
  } catch (const std::out_of_range&) {
    throw InvalidParameters(std::string(flag) + " out of range");
  }
}

// a: "square" (1) | "nonsquare" (g) | "conic" (g, b = 0) | "0" | "c0,c1".
// b: "auto" (0 for conic, else least valid b1 e, else 0) | "c0,c1".
UnitalParams resolve_unital(const FieldCtx& ctx, const std::string& a_spec, const std::string& b_spec) {
  Fq2 a;
  bool conic = false;
  if (a_spec == "square") {
    a = ctx.one2();
  } else if (a_spec == "nonsquare") {
    a = ctx.g();
  } else if (a_spec == "conic") {
    a = ctx.g();
    conic = true;
  } else if (a_spec == "0") {
    a = ctx.zero2();
  } else {
    a = parse_pair(ctx, a_spec, "--a");
  }
  Fq2 b;
  if (b_spec == "auto") {
    if (conic) {
      b = ctx.zero2();
    } else {
      if (auto b1 = least_valid_b1(a)) {
        b = Fq2(*b1) * ctx.e();
      } else if (try_validate(a, ctx.zero2())) {
        b = ctx.zero2();  // only the conic form is available for this a
      } else {
        throw InvalidParameters("no b in {0} or GF(q)^* e makes this a valid");
      }
    }
  } else {
    b = parse_pair(ctx, b_spec, "--b");
    if (conic && !b.is_zero()) throw InvalidParameters("--a conic forces b = 0");
  }
  return validate(a, b);
}

json base_doc(const FieldCtx& ctx, const std::string& command) {
  return json{{"command", command}, {"field", ctx_header(ctx)}};
}

json cmd_unital(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  UnitalParams p = resolve_unital(*ctx, cfg.a.empty() ? "square" : cfg.a, cfg.b);
  Unital u(p);
  json doc = base_doc(*ctx, "unital");
  doc["unital"] = to_json(p);
  doc["points"] = u.size();
  doc["classical"] = p.classical;
  doc["a_character"] = p.a_square ? "square" : "non-square";
  if (!cfg.skip_census) {
    json census = json::object();
    for (auto [k, n] : u.line_census()) census[std::to_string(k)] = n;
    doc["line_census"] = census;
  }
  // sampled automorphism check
  std::mt19937_64 rng(cfg.seed);
  const auto units2 = ctx->units_q2();
  const auto all1 = ctx->elements_q();
  const auto pts = u.enumerate_points();
  std::uint64_t checks = 0, preserved = 0;
  for (int i = 0; i < 20; ++i) {
    Fq2 gamma = units2[rng() % units2.size()];
    Fq t = all1[rng() % all1.size()];
    Collineation g = translation(u, gamma, t);
    for (int k = 0; k < 10; ++k) {
      ++checks;
      if (u.contains(g.apply(pts[rng() % pts.size()]))) ++preserved;
    }
  }
  doc["sampled_automorphism_checks"] = {{"seed", cfg.seed}, {"checks", checks}, {"preserved", preserved}};
  if (preserved != checks) throw InvariantViolation("a translation moved a unital point off the unital");
  return doc;
}

json construction_doc(const Unital& u, const Construction& c) {
  json doc;
  doc["found"] = true;
  doc["params"] = to_json(c.params);
  doc["candidates_tried"] = c.candidates_tried;
  doc["configuration"] = config_to_json(u, c.config);
  TripleOnanVerdict v = verify_triple_onan(u, c.config.points);
  doc["verification"] = to_json(v);
  doc["equations_hold"] = check_equations(c.params).all() && check_equations_boxed(c.params).all();
  FPointReport f = f_point(u, c.params);
  doc["f_point"] = {{"F", to_json(f.F)}, {"in_unital", f.in_unital}, {"matches_2st_over_s_plus_t", f.f_matches}};
  if (!v.valid) throw InvariantViolation("constructed configuration failed verification");
  return doc;
}

json cmd_construct(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  const std::string& m = cfg.method;
  json doc = base_doc(*ctx, "construct");
  doc["method"] = m;
  if (m == "conic") {
    UnitalParams p = resolve_unital(*ctx, cfg.a.empty() ? "conic" : cfg.a, cfg.b);
    Unital u(p);
    doc["unital"] = to_json(p);
    if (auto c = conic_construction(u)) {
      doc.update(construction_doc(u, *c));
    } else {
      doc["found"] = false;
      doc["reason"] = "no (h^2, u) satisfies the sufficient conditions (q <= 5 has none)";
    }
  } else if (m == "asq14" || m == "q3asq") {
    if (!cfg.a.empty() && cfg.a != "square" && cfg.a != "1,0")
      throw InvalidParameters("--method " + m + " works in U(1, b1 e); use --a square");
    UnitalParams p = resolve_unital(*ctx, "square", cfg.b);
    if (!p.b.c0().is_zero()) throw InvalidParameters("--b must be of the form b1 e (c0 = 0)");
    Unital u(p);
    doc["unital"] = to_json(p);
    std::optional<Construction> c;
    if (m == "asq14") {
      c = asq14_construction(*ctx, p.b.c1());
    } else {
      Q3Result r = q3_construction(*ctx, p.b.c1());
      doc["type_compatible_pairs"] = r.type_compatible_pairs;
      doc["solution_pairs"] = r.solution_pairs;
      c = r.construction;
    }
    if (c) {
      doc.update(construction_doc(u, *c));
    } else {
      doc["found"] = false;
      doc["reason"] = "no parameters verified";
    }
  } else if (m == "fengli") {
    UnitalParams p = resolve_unital(*ctx, cfg.a.empty() ? "square" : cfg.a, cfg.b);
    Unital u(p);
    doc["unital"] = to_json(p);
    FengLiScan scan = feng_li_scan(u);
    doc["scan"] = {{"ordered_pairs_tried", scan.ordered_pairs_tried},
                   {"ordered_hits", scan.ordered_hits},
                   {"distinct_onans", scan.configs.size()}};
    bool any_extends = false;
    for (const auto& r : scan.configs) any_extends = any_extends || !extend_onan(u, *r.onan).empty();
    doc["any_extends"] = any_extends;
    if (scan.configs.empty()) {
      doc["found"] = false;
      doc["reason"] = "no (lambda1, lambda2) gives an O'Nan";
    } else {
      const FengLiResult& r = scan.configs.front();
      FengLiDiagonals d = fl_diagonals(u, r);
      doc["found"] = true;
      doc["lambda1"] = to_json(r.lambda1);
      doc["lambda2"] = to_json(r.lambda2);
      doc["x1"] = to_json(*r.x1);
      doc["x2"] = to_json(*r.x2);
      doc["r"] = to_json(*r.r);
      doc["onan"] = onan_to_json(u, *r.onan);
      doc["verified"] = verify_onan(u, r.onan->lines).valid;
      json diag = json::array();
      const char* names[3] = {"I0", "I1", "I2"};
      for (std::size_t i = 0; i < 3; ++i)
        diag.push_back({{"name", names[i]}, {"point", to_json(d.points[i])}, {"in_unital", d.in_unital[i]}});
      doc["diagonals"] = diag;
      doc["diagonal_closed_forms_match"] = d.closed_forms_match;
      doc["extends"] = !extend_onan(u, *r.onan).empty();
    }
    if (any_extends) throw InvariantViolation("a Feng-Li O'Nan extends to a Triple O'Nan");
  } else {
    throw InvalidParameters("--method must be conic, asq14, q3asq or fengli");
  }
  return doc;
}

json cmd_search(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  UnitalParams p = resolve_unital(*ctx, cfg.a.empty() ? "square" : cfg.a, cfg.b);
  Unital u(p);
  SearchResult r = canonical_search(u, cfg.threads);
  json doc = base_doc(*ctx, "search");
  doc["unital"] = to_json(p);
  doc["report"] = to_json(r.report);
  json configs = json::array();
  for (std::size_t i = 0; i < r.configs.size() && i < cfg.max_configs; ++i)
    configs.push_back({{"params", to_json(r.params[i])}, {"configuration", config_to_json(u, r.configs[i])}});
  doc["configurations"] = configs;
  doc["configurations_truncated"] = r.configs.size() > cfg.max_configs;
  return doc;
}

json cmd_count(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  const std::string kind = cfg.a.empty() ? "square" : cfg.a;
  std::vector<std::pair<Fq2, Fq2>> ab;
  if (kind == "square") {
    for (Fq b1 : valid_b1_values(ctx->one2())) ab.emplace_back(ctx->one2(), Fq2(b1) * ctx->e());
  } else if (kind == "nonsquare" || kind == "conic") {
    ab.emplace_back(ctx->g(), ctx->zero2());
    for (Fq b1 : valid_b1_values(ctx->g())) ab.emplace_back(ctx->g(), Fq2(b1) * ctx->e());
  } else {
    throw InvalidParameters("count takes --a square or --a nonsquare");
  }
  InvarianceVerdict v = count_invariance_check(ab, cfg.threads);
  json doc = base_doc(*ctx, "count");
  doc["a_character"] = kind == "square" ? "square" : "non-square";
  json rows = json::array();
  for (const auto& [p, n] : v.counts) rows.push_back({{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"canonical", n}});
  doc["counts"] = rows;
  doc["equal"] = v.equal;
  doc["common"] = v.common;
  const std::uint64_t q = ctx->q();
  doc["total"] = q * q * q * v.common;
  if (!v.equal) throw InvariantViolation("canonical counts differ across b: " + rows.dump());
  return doc;
}

json cmd_cyclotomic(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  CyclotomicTable t = cyclotomic(*ctx, cfg.order);
  IdentityReport rep = check_cyclotomic_identities(t);
  json doc = base_doc(*ctx, "cyclotomic");
  doc["table"] = to_json(t);
  doc["identities_hold"] = rep.holds;
  doc["failures"] = rep.failures;
  if (cfg.order == 4) {
    ConicPairCount n = count_conic_xy_pairs(*ctx);
    doc["l1"] = n.l1;
    doc["l2"] = n.l2;
    doc["n"] = {{"direct", n.direct}, {"product", n.product}, {"formula", n.formula}, {"agree", n.agree()}};
    if (!n.agree()) throw InvariantViolation("(X, Y) counts disagree");
  }
  if (!rep.holds) throw InvariantViolation("cyclotomic identities fail: " + rep.failures.front());
  return doc;
}

json cmd_equiv(const RunConfig& cfg) {
  CtxPtr ctx = parse_q(cfg.q);
  json doc = base_doc(*ctx, "equiv");
  auto classes = equivalence_classes(*ctx);
  json rows = json::array();
  std::size_t nonclassical = 0;
  for (const auto& c : classes) {
    rows.push_back({{"a", to_json(c.a)},
                    {"b", to_json(c.b)},
                    {"classical", c.classical},
                    {"conic", c.conic},
                    {"a_square", c.a_square},
                    {"size", c.size}});
    if (!c.classical) ++nonclassical;
  }
  doc["classes"] = rows;
  doc["class_count"] = classes.size();
  doc["nonclassical_class_count"] = nonclassical;
  if (!cfg.a.empty() && !cfg.a2.empty()) {
    UnitalParams p1 = resolve_unital(*ctx, cfg.a, cfg.b);
    UnitalParams p2 = resolve_unital(*ctx, cfg.a2, cfg.b2.empty() ? "auto" : cfg.b2);
    auto w = equivalent_params(p1.a, p1.b, p2.a, p2.b);
    json pair = {{"from", to_json(p1)}, {"to", to_json(p2)}, {"equivalent", w.has_value()}};
    if (w)
      pair["witness"] = {{"v", to_json(w->v)}, {"gamma", to_json(w->gamma)}, {"u", to_json(w->u)}, {"tau_power", w->tau_power}};
    doc["pair"] = pair;
  }
  return doc;
}

void emit(const json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw InvalidParameters("cannot open --out file " + out);
  f << doc.dump(2) << '\n';
}

int fail(int code, const std::string& kind, const std::string& msg) {
  json err = {{"error", kind}, {"message", msg}, {"exit_code", code}};
  std::cerr << err.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Buekenhout-Metz unitals and Triple O'Nan configurations"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "field order q, or p^exp")->required();
    sub->add_option("--out", cfg.out, "write JSON here instead of stdout");
  };
  auto add_unital = [&](CLI::App* sub) {
    sub->add_option("--a", cfg.a, "square | nonsquare | conic | 0 | c0,c1");
    sub->add_option("--b", cfg.b, "auto | c0,c1")->default_val("auto");
  };

  auto* un = app.add_subcommand("unital", "point count, discriminant, line census");
  add_common(un);
  add_unital(un);
  un->add_option("--seed", cfg.seed, "seed for the sampled automorphism check");
  un->add_flag("--skip-census", cfg.skip_census, "skip the all-lines census");

  auto* co = app.add_subcommand("construct", "run an explicit construction and verify it");
  add_common(co);
  add_unital(co);
  co->add_option("--method", cfg.method, "conic | asq14 | q3asq | fengli")
      ->required()
      ->check(CLI::IsMember({"conic", "asq14", "q3asq", "fengli"}));

  auto* se = app.add_subcommand("search", "exhaustive canonical-frame search");
  add_common(se);
  add_unital(se);
  se->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  se->add_option("--max-configs", cfg.max_configs, "configurations listed in the output");

  auto* ct = app.add_subcommand("count", "canonical counts across all valid b for one character of a");
  add_common(ct);
  ct->add_option("--a", cfg.a, "square | nonsquare");
  ct->add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));

  auto* cy = app.add_subcommand("cyclotomic", "cyclotomic numbers of order 2 or 4");
  add_common(cy);
  cy->add_option("--order", cfg.order, "2 or 4")->check(CLI::IsMember({2u, 4u}));

  auto* eq = app.add_subcommand("equiv", "equivalence classes of (a, b)");
  add_common(eq);
  add_unital(eq);
  eq->add_option("--a2", cfg.a2, "second unital for a witness search");
  eq->add_option("--b2", cfg.b2, "second unital b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    json doc;
    if (*un) doc = cmd_unital(cfg);
    else if (*co) doc = cmd_construct(cfg);
    else if (*se) doc = cmd_search(cfg);
    else if (*ct) doc = cmd_count(cfg);
    else if (*cy) doc = cmd_cyclotomic(cfg);
    else doc = cmd_equiv(cfg);
    emit(doc, cfg.out);
    return 0;
  } catch (const InvalidParameters& e) {
    return fail(2, "invalid_parameters", e.what());
  } catch (const InvariantViolation& e) {
    return fail(3, "invariant_violation", e.what());
  } catch (const ResourceCap& e) {
    return fail(4, "resource_cap", e.what());
  } catch (const std::exception& e) {
    return fail(1, "error", e.what());
  }
}
