#pragma once

// O'Nan and Triple O'Nan configurations.
//
// A Triple O'Nan is a quadrangle P, Q, X, Y of unital points whose diagonal
// points V = PQ.XY, M = PX.QY, N = PY.QX are unital points as well. It is
// BM-special when one of its six lines passes through the special point T.
//
// In the canonical frame the special line is [1,0,0] and
//   V = (0,0,1), X = (0,s,1), Y = (0,t,1), Q = (xk,k,1), P = (xj,j,1), j = hk.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital_lab/gfield.hpp"
#include "unital_lab/plane.hpp"
#include "unital_lab/unital.hpp"

namespace unital_lab {

/// Sorted line indices; equal for every labelling of the same configuration.
using ConfigId = std::array<std::uint64_t, 6>;
using OnanId = std::array<std::uint64_t, 4>;

struct SevenPoints {
  ProjPoint P, Q, X, Y, V, M, N;
};

struct TripleOnanConfig {
  SevenPoints points;
  // PXM, YQM, PYN, XQN, PVQ, YVX
  std::array<ProjLine, 6> lines;
  bool bm_special = false;

  ConfigId id() const;
};

/// Four lines, no three concurrent; points[k] is the meet of the k-th pair in
/// the order (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
struct OnanConfig {
  std::array<ProjLine, 4> lines;
  std::array<ProjPoint, 6> points;

  OnanId id() const;
};

/// Canonical-frame data (a, b, x, k, h, s, t).
struct TripleOnanParams {
  Fq2 a, b, x, k, h;
  Fq s, t;

  Fq2 j() const { return h * k; }
  const FieldCtx& ctx() const { return a.ctx(); }
  friend bool operator==(const TripleOnanParams&, const TripleOnanParams&) = default;
};

/// Throws InvalidParameters unless x, k, h, s, t are nonzero, s != t, h != 1
/// and both s - t h and t - s h are nonzero.
void check_params(const TripleOnanParams& p);
bool params_ok(const TripleOnanParams& p);

/// The coefficient quantities of the frame
///   W = h(s-t)/(s-th),  U = st(1-h)/(s-th)
/// and their s <-> t images V^ = h(t-s)/(t-sh), Z^ = st(1-h)/(t-sh), giving
///   M = (kxW, kW + U, 1),  N = (kxV^, kV^ + Z^, 1).
struct FrameCoefficients {
  Fq2 w, u, v_hat, z_hat;
};
FrameCoefficients wuvz(Fq2 h, Fq s, Fq t);

/// The seven frame points and six lines; M and N from line meets.
/// Membership of P, Q, M, N is not checked.
TripleOnanConfig realize(const TripleOnanParams& p);

/// Which of the membership equations for Q, P, M, N hold (in that order).
struct EquationCheck {
  std::array<bool, 4> holds{};
  bool all() const { return holds[0] && holds[1] && holds[2] && holds[3]; }
};
/// Membership equations written directly: a X^2 - a^q X^2q + (b - b^q) X^(q+1) = Y - Y^q.
EquationCheck check_equations(const TripleOnanParams& p);
/// Same equations in terms of Delta = a x^2 k^2, Theta = (xk)^(q+1) and box(Y) = Y - Y^q.
EquationCheck check_equations_boxed(const TripleOnanParams& p);

struct TripleOnanVerdict {
  bool valid = false;
  bool bm_special = false;
  int lines_through_special = 0;
  std::vector<std::string> problems;
  std::optional<TripleOnanConfig> config;
};

/// Full check from seven labelled points.
TripleOnanVerdict verify_triple_onan(const Unital& u, const SevenPoints& pts);
/// Check from the quadrangle alone; V, M, N are computed.
TripleOnanVerdict verify_quadrangle(const Unital& u, const ProjPoint& P, const ProjPoint& Q, const ProjPoint& X,
                                    const ProjPoint& Y);

struct OnanVerdict {
  bool valid = false;
  std::string problem;
  std::optional<OnanConfig> config;
};
OnanVerdict verify_onan(const Unital& u, const std::array<ProjLine, 4>& lines);

/// {PX,QY,PY,QX}, {PX,QY,PQ,XY}, {PY,QX,PQ,XY}.
std::array<OnanConfig, 3> sub_onans(const TripleOnanConfig& c);

/// For each way of splitting the six points into a quadrangle plus an
/// opposite pair, the third diagonal point of that quadrangle.
std::array<ProjPoint, 3> completion_points(const OnanConfig& c);
/// The Triple O'Nans (at most three) that contain the given O'Nan.
std::vector<TripleOnanConfig> extend_onan(const Unital& u, const OnanConfig& c);

// Feng-Li construction, with sigma: (x,y,z) -> (-x,y,z).
//
// For lambda in GF(q) the point (x_lambda, x_lambda, 1) lies in U; its sigma
// image (-x_lambda, x_lambda, 1) is the construction point on l1 = [1,1,0].
// Hence R = (0, r, 1) with r = 2 x1 x2 / (x1 + x2) and the diagonal points
// are I0 = (1,0,0), I1 = (0, x1, 1), I2 = (0, x2, 1).

struct FengLiResult {
  Fq lambda1, lambda2;
  std::optional<Fq2> x1, x2;  // x_lambda = (a^q + lambda - b) / (a^(q+1) - (lambda - b)^(q+1))
  std::optional<Fq2> r;       // 2 x1 x2 / (x1 + x2)
  std::optional<OnanConfig> onan;
  std::string reason;  // why there is no configuration
};
FengLiResult feng_li_onan(const Unital& u, Fq lambda1, Fq lambda2);

struct FengLiDiagonals {
  std::array<ProjPoint, 3> points;  // I0, I1, I2
  std::array<bool, 3> in_unital{};
  bool closed_forms_match = false;  // I0 = (1,0,0), I1 = (0,x1,1), I2 = (0,x2,1)
};
/// Requires res.onan.
FengLiDiagonals fl_diagonals(const Unital& u, const FengLiResult& res);

struct FengLiScan {
  std::uint64_t ordered_pairs_tried = 0;
  std::uint64_t ordered_hits = 0;
  std::vector<FengLiResult> configs;  // one per distinct O'Nan, ascending (lambda1, lambda2)
};
FengLiScan feng_li_scan(const Unital& u);

// Further points of a canonical-frame configuration.

struct FPointReport {
  ProjPoint F;  // MN . XY
  bool in_unital = false;
  ProjLine mn;
  bool mn_matches_closed_form = false;  // [kh(s+t) - (1+h)st, -kxh(s+t), 2kxhst]
  std::optional<Fq> f_closed_form;      // 2st/(s+t); absent when s + t = 0
  bool f_matches = false;
};
FPointReport f_point(const Unital& u, const TripleOnanParams& p);

struct EPointRow {
  std::uint32_t q = 0;
  bool a_square = false;
  bool degenerate = false;  // h = -1
  ProjPoint E;              // MN . PQ
  bool affine = false;
  bool in_unital = false;
  bool closed_form_match = false;  // E = (2khx, 2kh, h+1)
};
EPointRow e_point(const Unital& u, const TripleOnanParams& p);
std::vector<EPointRow> e_point_experiment(const Unital& u, const std::vector<TripleOnanParams>& configs);

}  // namespace unital_lab
