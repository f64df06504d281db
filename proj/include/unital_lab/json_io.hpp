#pragma once

// JSON encoding shared by the CLI and tests.
//
// GF(q) elements are written as their table index: for q = p the integer
// itself, for q = p^exp the base-p digits are the polynomial coefficients,
// constant term first. GF(q^2) elements are coordinate pairs [c0, c1] over
// the basis {1, e}. Every document carries the field header.

#include "json.hpp"  // vendored nlohmann/json

#include "unital_lab/construct.hpp"
#include "unital_lab/gfield.hpp"
#include "unital_lab/onan.hpp"
#include "unital_lab/plane.hpp"
#include "unital_lab/search.hpp"
#include "unital_lab/unital.hpp"

namespace unital_lab {

using json = nlohmann::json;

/// {p, exp, q, modulus, w, e, g, fq_encoding}
json ctx_header(const FieldCtx& ctx);
/// Rebuilds the context and checks that modulus, w and g agree with the header.
CtxPtr ctx_from_header(const json& j);

json to_json(Fq x);
json to_json(Fq2 x);
Fq fq_from_json(const FieldCtx& ctx, const json& j);
Fq2 fq2_from_json(const FieldCtx& ctx, const json& j);

json to_json(const ProjPoint& p);  // {x, y, z}
json to_json(const ProjLine& l);   // [l0, l1, l2]
ProjPoint point_from_json(const FieldCtx& ctx, const json& j);
ProjLine line_from_json(const FieldCtx& ctx, const json& j);

json to_json(const UnitalParams& p);
UnitalParams unital_params_from_json(const FieldCtx& ctx, const json& j);

json to_json(const TripleOnanParams& p);  // {a, b, x, k, h, s, t}
TripleOnanParams triple_params_from_json(const FieldCtx& ctx, const json& j);

/// {q, p, exp, a, b, points{P,Q,X,Y,V,M,N}, lines[{name, coords}], bm_special}
json config_to_json(const Unital& u, const TripleOnanConfig& c);
/// Lines are recomputed from the points; InvalidParameters if they disagree
/// with the stored ones.
TripleOnanConfig config_from_json(const FieldCtx& ctx, const json& j);

/// {q, p, exp, a, b, lines[4], points[6]}
json onan_to_json(const Unital& u, const OnanConfig& c);
OnanConfig onan_from_json(const FieldCtx& ctx, const json& j);

json to_json(const SearchReport& r);
json to_json(const CyclotomicTable& t);
json to_json(const TripleOnanVerdict& v);

}  // namespace unital_lab
