#pragma once

// Explicit BM-special Triple O'Nan constructions, the b-transfer between
// unitals U(a, b1 e) and U(a, b2 e), and cyclotomic numbers of orders 2 and 4.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "unital_lab/gfield.hpp"
#include "unital_lab/onan.hpp"
#include "unital_lab/unital.hpp"

namespace unital_lab {

// ---------------------------------------------------------------- cyclotomy

/// (i,j)_k = #{x in GF(q)^* : x in R_i, x+1 in R_j}, R_i = w^i <w^k>.
struct CyclotomicTable {
  std::uint32_t q = 0;
  std::uint32_t order = 0;
  Fq w;
  std::vector<std::vector<std::uint64_t>> counts;

  std::uint64_t at(std::int64_t i, std::int64_t j) const;  // indices taken mod order
  std::uint64_t total() const;
};

/// Class index of x in GF(q)^*: log_w(x) mod order.
std::uint32_t residue_class(Fq x, std::uint32_t order);

/// Throws InvalidParameters for order 4 with q != 1 mod 4, or order not in {2,4}.
CyclotomicTable cyclotomic(const FieldCtx& ctx, std::uint32_t order);

struct IdentityReport {
  bool holds = true;
  std::vector<std::string> failures;
};
/// Order 4: symmetry relations and row sums (q = 1 or 5 mod 8), plus the
/// five-group description in terms of l1, l2.
/// Order 2: (0,0)=(1,0)=(1,1)=(q-3)/4, (0,1)=(q+1)/4 for q = 3 mod 4;
/// (0,0)=(q-5)/4, others (q-1)/4 for q = 1 mod 4.
IdentityReport check_cyclotomic_identities(const CyclotomicTable& t);

/// l1 = (1,2)_4 for q = 1 mod 8, (1,0)_4 for q = 5 mod 8; l2 = (0,3)_4.
std::pair<std::uint64_t, std::uint64_t> cyclotomic_l1_l2(const CyclotomicTable& t);

struct ConicPairCount {
  std::uint64_t direct = 0;   // enumeration of (X, Y)
  std::uint64_t product = 0;  // ((1,0)+(1,2))((1,1)+(1,3)) + ((3,0)+(3,2))((3,1)+(3,3))
  std::uint64_t formula = 0;  // 2((q-1)/4 - l1 - l2)(l1 + l2)
  std::uint64_t l1 = 0, l2 = 0;
  bool agree() const { return direct == product && product == formula; }
};
/// q = 1 mod 4 only (InvalidParameters otherwise). Counts (X, Y) with
/// X,Y in R_1, X+1 in R_0 u R_2, Y+1 in R_1 u R_3, or
/// X,Y in R_3, X+1 in R_1 u R_3, Y+1 in R_0 u R_2.
ConicPairCount count_conic_xy_pairs(const FieldCtx& ctx);

/// The (X, Y) candidates above, ascending. For q = 3 mod 4: X, X+1 squares
/// and Y a square with Y+1 a non-square, or the reverse.
std::vector<std::pair<Fq, Fq>> conic_xy_candidates(const FieldCtx& ctx);

// ------------------------------------------------------------ constructions

struct Construction {
  std::string method;
  TripleOnanParams params;
  TripleOnanConfig config;
  std::uint64_t candidates_tried = 0;
};

/// -(1 + 1/h^2) st/(s+t) + (1/h)(s^2+t^2)/(s+t), the required value of 2a(xk)^2.
Fq2 conic_rhs(Fq2 h, Fq s, Fq t);
/// (-h^2/u^2 + 1)(-h^2 u^2 + 1) for h^2, u in GF(q).
Fq conic_xy_product(Fq h2, Fq u);

/// Conic unital (b = 0, a non-square). Walks the (X, Y) candidates, derives
/// h^2 = sqrt(XY) with X = -h^2/u^2, Y = -h^2 u^2, sets s = u, t = 1,
/// k = c(1 + 1/h), c = (s^2+t^2)/(2(s+t)), and x from 2a(xk)^2 = conic_rhs.
/// Returns nullopt when no candidate works (always the case for q <= 5).
std::optional<Construction> conic_construction(const Unital& u);

/// Every (h^2, u) in GF(q) satisfying the sufficient conditions with a
/// non-square right-hand side; the exhaustive counterpart of the candidate walk.
std::vector<std::pair<Fq, Fq>> conic_sufficient_pairs(const FieldCtx& ctx);

/// a = 1, b = b1 e, q = 1 mod 4: h^2 a non-square of GF(q), k = -b1 e h + b1 e,
/// x = 1/k, t = 2h^2(+-i - 1)/(h^2 + 1), s = +-i t with i^2 = -1.
std::optional<Construction> asq14_construction(const FieldCtx& ctx, Fq b1);

struct Q3Result {
  std::optional<Construction> construction;
  std::uint64_t type_compatible_pairs = 0;  // X, X+1 same type; Y, Y+1 different types
  std::uint64_t solution_pairs = 0;         // X(X+1) = -Y(Y+1) != 0
};
/// a = 1, b = b1 e, q = 3 mod 4: theta^2 = e, r = theta^(q+1) (r^2 = -w),
/// h = e/r, k = r(-1 + b1 r) + (1 + b1 r)e, x = theta/k, and s, t with
/// -(s^2+t^2)/(2(s+t)) = r found via s = 2rX, t = 2rY.
Q3Result q3_construction(const FieldCtx& ctx, Fq b1);

// ----------------------------------------------------------------- transfer

struct TransferWitness {
  Fq2 m;
  Fq2 y;
};
struct TransferResult {
  TripleOnanParams params;  // (a, b2 e, y, m, h, s, t)
  TransferWitness witness;
};
/// Moves a configuration of U(a, b1 e) to U(a, b2 e) keeping a, h, s, t.
/// m solves box(k) - box(m) = 2(b1-b2)e Theta and box(h(k-m)) = 2(b1-b2)e Theta h^(q+1);
/// y = sqrt(Delta/(a m^2)).
/// Throws InvalidParameters if b is not of the form b1 e or (a, b2 e) is invalid,
/// InvariantViolation if the linear system or the square root fails.
TransferResult transfer_b(const TripleOnanParams& params, Fq b2);

}  // namespace unital_lab
