#include "unital_lab/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <thread>

namespace unital_lab {

namespace {

struct Hit {
  ConfigId id;
  TripleOnanParams params;
  std::uint32_t x_index;
};

struct WorkerOut {
  std::vector<Hit> hits;
  std::uint64_t kj_pairs = 0;
  std::uint64_t tested = 0;
};

void search_slice(const Unital& u, const std::vector<Fq2>& xs, std::size_t begin, std::size_t stride,
                  const std::vector<std::pair<Fq, Fq>>& st, WorkerOut& out) {
  const FieldCtx& c = u.ctx();
  std::vector<Fq2> line_pts;
  for (std::size_t xi = begin; xi < xs.size(); xi += stride) {
    const Fq2 x = xs[xi];
    // unital points (x y, y, 1), y != 0, on the line [-1, x, 0] through V
    line_pts.clear();
    for (Fq2 y : c.units_q2())
      if (u.contains_affine(x * y, y)) line_pts.push_back(y);
    for (Fq2 k : line_pts)
      for (Fq2 j : line_pts) {
        if (k == j) continue;
        ++out.kj_pairs;
        const Fq2 h = j / k;
        for (auto [s, t] : st) {
          const Fq2 ds = Fq2(s) - Fq2(t) * h, dt = Fq2(t) - Fq2(s) * h;
          if (ds.is_zero() || dt.is_zero()) continue;
          ++out.tested;
          auto co = wuvz(h, s, t);
          if (!u.contains_affine(k * x * co.w, k * co.w + co.u)) continue;
          if (!u.contains_affine(k * x * co.v_hat, k * co.v_hat + co.z_hat)) continue;
          TripleOnanParams p{u.a(), u.b(), x, k, h, s, t};
          out.hits.push_back({realize(p).id(), p, static_cast<std::uint32_t>(xi)});
        }
      }
  }
}

}  // namespace

SearchResult canonical_search(const Unital& u, unsigned threads) {
  if (u.params().classical) throw InvalidParameters("canonical search rejects the classical unital (a = 0)");
  const auto t0 = std::chrono::steady_clock::now();
  const FieldCtx& c = u.ctx();
  threads = std::max(1u, threads);

  const std::vector<Fq2> xs = c.units_q2();
  std::vector<std::pair<Fq, Fq>> st;
  for (Fq s : c.units_q())
    for (Fq t : c.units_q())
      if (!(s == t)) st.emplace_back(s, t);

  std::vector<WorkerOut> outs(threads);
  if (threads == 1) {
    search_slice(u, xs, 0, 1, st, outs[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w)
      pool.emplace_back(search_slice, std::cref(u), std::cref(xs), w, threads, std::cref(st), std::ref(outs[w]));
    for (auto& th : pool) th.join();
  }

  SearchResult res;
  SearchReport& rep = res.report;
  std::vector<Hit> hits;
  for (auto& o : outs) {
    rep.kj_pairs += o.kj_pairs;
    rep.tested += o.tested;
    hits.insert(hits.end(), o.hits.begin(), o.hits.end());
  }
  // loop order: x index, then the order of emission within one x
  std::stable_sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.x_index < b.x_index; });
  std::map<ConfigId, TripleOnanParams> reps;
  for (const Hit& h : hits) reps.try_emplace(h.id, h.params);

  rep.q = c.q();
  rep.a = u.a();
  rep.b = u.b();
  rep.a_square = u.params().a_square;
  rep.threads = threads;
  rep.x_values = xs.size();
  rep.st_pairs = st.size();
  rep.tuples = hits.size();
  rep.configurations = reps.size();
  rep.total = std::uint64_t{c.q()} * c.q() * c.q() * rep.configurations;
  if (rep.tuples != 4 * rep.configurations)
    throw InvariantViolation("tuple count " + std::to_string(rep.tuples) + " is not 4 x " +
                             std::to_string(rep.configurations) + " configurations");
  for (auto& [id, p] : reps) {
    res.params.push_back(p);
    res.configs.push_back(realize(p));
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

InvarianceVerdict count_invariance_check(const std::vector<std::pair<Fq2, Fq2>>& ab, unsigned threads) {
  if (ab.empty()) throw InvalidParameters("no (a, b) pairs given");
  InvarianceVerdict v;
  std::optional<bool> character;
  for (auto [a, b] : ab) {
    UnitalParams p = validate(a, b);
    if (p.classical) throw InvalidParameters("classical unital in invariance check");
    if (character && *character != p.a_square) throw InvalidParameters("pairs differ in the character of a");
    character = p.a_square;
    v.counts.emplace_back(p, canonical_search(Unital(p), threads).report.configurations);
  }
  v.common = v.counts.front().second;
  v.equal = std::all_of(v.counts.begin(), v.counts.end(), [&](const auto& e) { return e.second == v.common; });
  return v;
}

OracleResult direct_enumeration_oracle(const Unital& u, std::uint64_t cap, bool slice_special_line) {
  const FieldCtx& c = u.ctx();
  const std::vector<ProjPoint> pts = u.enumerate_points();  // T first
  const std::uint64_t q = c.q();
  const std::uint64_t others = q * q * q - q;
  const std::uint64_t lines = slice_special_line ? 1 : q * q;
  const std::uint64_t estimate = lines * (q * (q - 1) / 2) * (others * (others - 1) / 2);
  if (estimate > cap)
    throw ResourceCap("direct enumeration needs " + std::to_string(estimate) + " quadrangles, cap " + std::to_string(cap));

  OracleResult res;
  res.sliced = slice_special_line;
  // affine unital points grouped by x coordinate (one group per line through T)
  std::map<std::uint32_t, std::vector<ProjPoint>> by_x;
  for (std::size_t i = 1; i < pts.size(); ++i) by_x[pts[i].x.index()].push_back(pts[i]);
  for (const auto& [xi, col] : by_x) {
    if (slice_special_line && xi != 0) continue;
    std::vector<ProjPoint> rest;
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i].x.index() != xi) rest.push_back(pts[i]);
    for (std::size_t a = 0; a < col.size(); ++a)
      for (std::size_t b = a + 1; b < col.size(); ++b)
        for (std::size_t p = 0; p < rest.size(); ++p)
          for (std::size_t r = p + 1; r < rest.size(); ++r) {
            ++res.quadrangles_checked;
            const ProjPoint &X = col[a], &Y = col[b], &P = rest[p], &Q = rest[r];
            if (collinear(P, Q, X) || collinear(P, Q, Y)) continue;
            const ProjPoint V = meet(join(P, Q), join(X, Y));
            if (!u.contains(V)) continue;
            auto verdict = verify_quadrangle(u, P, Q, X, Y);
            if (verdict.valid) res.configs.insert(verdict.config->id());
          }
  }
  return res;
}

TripleOnanConfig map_config(const Collineation& g, const TripleOnanConfig& c) {
  TripleOnanConfig out;
  const SevenPoints& s = c.points;
  out.points = SevenPoints{g.apply(s.P), g.apply(s.Q), g.apply(s.X), g.apply(s.Y),
                           g.apply(s.V), g.apply(s.M), g.apply(s.N)};
  for (std::size_t i = 0; i < 6; ++i) out.lines[i] = g.apply(c.lines[i]);
  out.bm_special = c.bm_special;
  return out;
}

std::set<ConfigId> translate_configs(const Unital& u, const std::vector<TripleOnanConfig>& configs, bool only_phi) {
  const FieldCtx& c = u.ctx();
  std::set<ConfigId> out;
  const std::vector<Fq2> gammas = only_phi ? std::vector<Fq2>{c.zero2()} : c.elements_q2();
  for (Fq2 gamma : gammas)
    for (Fq t : c.elements_q()) {
      Collineation g = translation(u, gamma, t);
      for (const auto& cfg : configs) out.insert(map_config(g, cfg).id());
    }
  return out;
}

}  // namespace unital_lab
