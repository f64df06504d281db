#pragma once

// Orthogonal Buekenhout-Metz unitals
//
//   U(a,b) = {(x, a x^2 + b x^(q+1) + r, 1) : x in GF(q^2), r in GF(q)} + {T = (0,1,0)}
//
// valid when d = (b - b^q)^2 + 4 a^(q+1) is a non-square of GF(q).

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "unital_lab/gfield.hpp"
#include "unital_lab/plane.hpp"

namespace unital_lab {

struct UnitalParams {
  Fq2 a;
  Fq2 b;
  Fq d;  // discriminant
  bool classical = false;  // a = 0
  bool conic = false;      // b = 0
  bool a_square = false;   // quadratic character of a in GF(q^2)

  const FieldCtx& ctx() const { return a.ctx(); }
};

Fq discriminant(Fq2 a, Fq2 b);

/// Checks the discriminant condition. Throws InvalidParameters when d is zero
/// or a square of GF(q).
UnitalParams validate(Fq2 a, Fq2 b);
/// Non-throwing form of validate().
std::optional<UnitalParams> try_validate(Fq2 a, Fq2 b);

/// Least b1 in GF(q)^* such that (a, b1*e) is valid, if any.
std::optional<Fq> least_valid_b1(Fq2 a);
/// All b1 in GF(q)^* with (a, b1*e) valid.
std::vector<Fq> valid_b1_values(Fq2 a);

class Unital {
 public:
  explicit Unital(const UnitalParams& params);

  const UnitalParams& params() const { return params_; }
  const FieldCtx& ctx() const { return params_.ctx(); }
  Fq2 a() const { return params_.a; }
  Fq2 b() const { return params_.b; }
  ProjPoint special() const { return special_point(ctx()); }

  bool contains(const ProjPoint& p) const;
  /// Membership of (x, y, 1).
  bool contains_affine(Fq2 x, Fq2 y) const { return y.c1().index() == offset_c1_[x.index()]; }

  /// a x^2 + b x^(q+1); the affine points over x are (x, offset(x) + r, 1), r in GF(q).
  Fq2 offset(Fq2 x) const;

  /// All q^3 + 1 points: T first, then affine points ordered by (x, r).
  std::vector<ProjPoint> enumerate_points() const;
  std::size_t size() const { return std::size_t{ctx().q()} * ctx().q() * ctx().q() + 1; }

  /// Number of points on l; throws InvariantViolation unless it is 1 or q+1.
  std::size_t line_profile(const ProjLine& l) const;
  /// Histogram of line_profile over every line of the plane.
  std::map<std::size_t, std::uint64_t> line_census() const;

 private:
  UnitalParams params_;
  // c1-coordinate of offset(x), indexed by x; (x,y,1) lies in U iff y has the same c1.
  std::vector<std::uint32_t> offset_c1_;
};

// Generators of the automorphism group fixing T.

/// (x,y,z) -> (x, y + t z, z).
Collineation phi(const Unital& u, Fq t);
/// (x,y,z) -> (x + g z, (2ag - (b^q - b) g^q) x + y + (a g^2 + b g^(q+1)) z, z).
Collineation psi(const Unital& u, Fq2 gamma);
/// (x,y,z) -> (dx, d^2 y, z). Requires d^2 in GF(q)^* when b is in GF(q),
/// otherwise d in GF(q)^*; throws InvalidParameters outside that domain.
Collineation mu(const Unital& u, Fq2 delta);
bool mu_domain_ok(const Unital& u, Fq2 delta);

/// psi_gamma after phi_t; these q^3 maps act regularly on U \ {T}.
Collineation translation(const Unital& u, Fq2 gamma, Fq t);

struct EquivalenceWitness {
  Fq v;                     // GF(q)^*
  Fq2 gamma;                // GF(q^2)^*
  Fq u;                     // GF(q)
  std::uint32_t tau_power;  // tau = x -> x^(p^tau_power) on GF(q^2)
};

/// Field automorphism x -> x^(p^power) of GF(q^2).
Fq2 apply_tau(Fq2 x, std::uint32_t power);

/// (a', b') = (tau(a) gamma^2 v, tau(b) gamma^(q+1) v + u), or nullopt.
std::optional<EquivalenceWitness> equivalent_params(Fq2 a, Fq2 b, Fq2 a2, Fq2 b2);
bool check_witness(Fq2 a, Fq2 b, Fq2 a2, Fq2 b2, const EquivalenceWitness& w);

struct EquivalenceClass {
  Fq2 a;  // least (a, b) of the class in canonical order
  Fq2 b;
  bool classical;
  bool conic;     // class contains a b = 0 representative
  bool a_square;
  std::uint64_t size;  // number of valid (a, b) pairs in the class
};

/// Orbits of the parameter transformations on all valid (a, b), classical included.
std::vector<EquivalenceClass> equivalence_classes(const FieldCtx& ctx);

}  // namespace unital_lab
