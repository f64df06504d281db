#pragma once

// Exact arithmetic in GF(q) and GF(q^2), q an odd prime power.
//
// GF(q) elements are stored as canonical indices: for q = p the residue
// itself, for q = p^n the coefficient vector of a polynomial over GF(p) read
// as a base-p number (constant term least significant). GF(q^2) is built as
// GF(q)[e]/(e^2 - w), w the least generator of GF(q)^*, and its elements are
// coordinate pairs (c0, c1) denoting c0 + c1*e. The canonical index of such a
// pair is c0 + q*c1; every "least" or "first" choice in the library refers to
// this ordering.

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "unital_lab/errors.hpp"

namespace unital_lab {

class FieldCtx;
using CtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of GF(q).
class Fq {
 public:
  Fq() = default;
  Fq(const FieldCtx* ctx, std::uint32_t index) : ctx_(ctx), v_(index) {}

  std::uint32_t index() const { return v_; }
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  bool is_zero() const { return v_ == 0; }

  friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_; }
  friend auto operator<=>(Fq a, Fq b) { return a.v_ <=> b.v_; }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t v_ = 0;
};

/// Element c0 + c1*e of GF(q^2).
class Fq2 {
 public:
  Fq2() = default;
  Fq2(const FieldCtx* ctx, std::uint32_t c0, std::uint32_t c1) : ctx_(ctx), c0_(c0), c1_(c1) {}
  // GF(q) embeds as the c1 = 0 subfield.
  Fq2(Fq x) : ctx_(x.ctx_ptr()), c0_(x.index()), c1_(0) {}  // NOLINT(google-explicit-constructor)

  Fq c0() const { return {ctx_, c0_}; }
  Fq c1() const { return {ctx_, c1_}; }
  std::uint32_t index() const;
  const FieldCtx& ctx() const { return *ctx_; }
  const FieldCtx* ctx_ptr() const { return ctx_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }
  bool in_base_field() const { return c1_ == 0; }

  friend bool operator==(Fq2 a, Fq2 b) { return a.c0_ == b.c0_ && a.c1_ == b.c1_; }
  friend auto operator<=>(Fq2 a, Fq2 b) {
    if (auto c = a.c1_ <=> b.c1_; c != 0) return c;
    return a.c0_ <=> b.c0_;
  }

 private:
  const FieldCtx* ctx_ = nullptr;
  std::uint32_t c0_ = 0;
  std::uint32_t c1_ = 0;
};

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// (p, exp) with q = p^exp, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// Immutable arithmetic context for GF(q) and GF(q^2). Elements keep a raw
/// pointer to their context, so a context is only ever handed out through a
/// shared pointer and never moves.
class FieldCtx {
 public:
  static constexpr std::uint64_t kDefaultMaxOrder = std::uint64_t{1} << 16;

  /// Bound on q^2, from UNITAL_LAB_MAX_ORDER when set.
  static std::uint64_t default_max_order();

  static CtxPtr make(std::uint32_t p, std::uint32_t exp);
  static CtxPtr make(std::uint32_t p, std::uint32_t exp, std::uint64_t max_order);
  /// Context for a field order given as a single integer (e.g. 9 = 3^2).
  static CtxPtr for_order(std::uint64_t q);

  /// Tabulated irreducible polynomial (constant term first, monic) used for
  /// GF(p^exp), exp > 1. Empty when none is tabulated.
  static std::vector<std::uint32_t> tabulated_modulus(std::uint32_t p, std::uint32_t exp);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t exp() const { return exp_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t q2() const { return q2_; }
  /// Defining polynomial of GF(q) over GF(p); empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fq w() const { return {this, w_}; }
  Fq2 e() const { return {this, 0, 1}; }
  Fq2 g() const { return fq2_index(g_); }

  Fq zero() const { return {this, 0}; }
  Fq one() const { return {this, 1}; }
  Fq2 zero2() const { return {this, 0, 0}; }
  Fq2 one2() const { return {this, 1, 0}; }

  Fq fq(std::uint32_t index) const;
  /// Image of an integer under Z -> GF(p) -> GF(q).
  Fq fq_int(std::int64_t n) const;
  Fq2 fq2(Fq c0, Fq c1) const { return {this, c0.index(), c1.index()}; }
  Fq2 fq2(std::uint32_t c0, std::uint32_t c1) const;
  Fq2 fq2_index(std::uint32_t index) const { return {this, index % q_, index / q_}; }

  std::vector<Fq> elements_q() const;
  std::vector<Fq> units_q() const;
  std::vector<Fq2> elements_q2() const;
  std::vector<Fq2> units_q2() const;

  // GF(q) arithmetic.
  Fq add(Fq a, Fq b) const {
    if (exp_ == 1) {
      std::uint32_t s = a.index() + b.index();
      return {this, s >= p_ ? s - p_ : s};
    }
    return {this, add_q_[std::size_t{a.index()} * q_ + b.index()]};
  }
  Fq neg(Fq a) const {
    if (exp_ == 1) return {this, a.index() == 0 ? 0 : p_ - a.index()};
    return {this, neg_q_[a.index()]};
  }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const {
    if (a.is_zero() || b.is_zero()) return zero();
    return {this, exp_q_[log_q_[a.index()] + log_q_[b.index()]]};
  }
  Fq inv(Fq a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in GF(q)");
    std::uint32_t l = log_q_[a.index()];
    return {this, exp_q_[l == 0 ? 0 : (q_ - 1) - l]};
  }
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::int64_t n) const;
  /// Discrete logarithm to base w.
  std::uint32_t log(Fq a) const {
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_q_[a.index()];
  }
  Fq w_pow(std::int64_t n) const;

  // GF(q^2) arithmetic.
  Fq2 add(Fq2 a, Fq2 b) const { return {this, add(a.c0(), b.c0()).index(), add(a.c1(), b.c1()).index()}; }
  Fq2 neg(Fq2 a) const { return {this, neg(a.c0()).index(), neg(a.c1()).index()}; }
  Fq2 sub(Fq2 a, Fq2 b) const { return add(a, neg(b)); }
  Fq2 mul(Fq2 a, Fq2 b) const {
    if (a.is_zero() || b.is_zero()) return zero2();
    return from_pair(exp_q2_[log_q2_[a.index()] + log_q2_[b.index()]]);
  }
  Fq2 inv(Fq2 a) const {
    if (a.is_zero()) throw std::domain_error("inverse of zero in GF(q^2)");
    std::uint32_t l = log_q2_[a.index()];
    return from_pair(exp_q2_[l == 0 ? 0 : (q2_ - 1) - l]);
  }
  Fq2 div(Fq2 a, Fq2 b) const { return mul(a, inv(b)); }
  Fq2 pow(Fq2 a, std::int64_t n) const;
  /// Discrete logarithm to base g.
  std::uint32_t log(Fq2 a) const {
    if (a.is_zero()) throw std::domain_error("log of zero");
    return log_q2_[a.index()];
  }
  Fq2 g_pow(std::int64_t n) const;

 private:
  struct Pair {
    std::uint32_t c0;
    std::uint32_t c1;
  };
  FieldCtx() = default;
  Fq2 from_pair(Pair pr) const { return {this, pr.c0, pr.c1}; }

  void build_base_field();
  void build_extension_field();
  std::uint32_t mul_q_raw(std::uint32_t a, std::uint32_t b) const;

  std::uint32_t p_ = 0;
  std::uint32_t exp_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t q2_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::uint32_t w_ = 0;
  std::uint32_t g_ = 0;

  std::vector<std::uint32_t> add_q_;  // q*q, only for exp > 1
  std::vector<std::uint32_t> neg_q_;  // only for exp > 1
  std::vector<std::uint32_t> log_q_;
  std::vector<std::uint32_t> exp_q_;  // length 2(q-1)
  std::vector<std::uint32_t> log_q2_;
  std::vector<Pair> exp_q2_;  // length 2(q^2-1)
};

inline std::uint32_t Fq2::index() const { return c0_ + ctx_->q() * c1_; }

// Operators. Mixed Fq/Fq2 expressions promote through the implicit embedding.
inline Fq operator+(Fq a, Fq b) { return a.ctx().add(a, b); }
inline Fq operator-(Fq a, Fq b) { return a.ctx().sub(a, b); }
inline Fq operator-(Fq a) { return a.ctx().neg(a); }
inline Fq operator*(Fq a, Fq b) { return a.ctx().mul(a, b); }
inline Fq operator/(Fq a, Fq b) { return a.ctx().div(a, b); }
inline Fq& operator+=(Fq& a, Fq b) { return a = a + b; }
inline Fq& operator-=(Fq& a, Fq b) { return a = a - b; }
inline Fq& operator*=(Fq& a, Fq b) { return a = a * b; }

inline Fq2 operator+(Fq2 a, Fq2 b) { return a.ctx().add(a, b); }
inline Fq2 operator-(Fq2 a, Fq2 b) { return a.ctx().sub(a, b); }
inline Fq2 operator-(Fq2 a) { return a.ctx().neg(a); }
inline Fq2 operator*(Fq2 a, Fq2 b) { return a.ctx().mul(a, b); }
inline Fq2 operator/(Fq2 a, Fq2 b) { return a.ctx().div(a, b); }
inline Fq2& operator+=(Fq2& a, Fq2 b) { return a = a + b; }
inline Fq2& operator-=(Fq2& a, Fq2 b) { return a = a - b; }
inline Fq2& operator*=(Fq2& a, Fq2 b) { return a = a * b; }

inline Fq pow(Fq a, std::int64_t n) { return a.ctx().pow(a, n); }
inline Fq2 pow(Fq2 a, std::int64_t n) { return a.ctx().pow(a, n); }
inline Fq inverse(Fq a) { return a.ctx().inv(a); }
inline Fq2 inverse(Fq2 a) { return a.ctx().inv(a); }

/// x^q; the non-trivial automorphism of GF(q^2) over GF(q).
inline Fq2 frobenius(Fq2 x) { return x.ctx().fq2(x.c0(), -x.c1()); }

/// x - x^q. Zero exactly on GF(q).
inline Fq2 box(Fq2 x) { return x.ctx().fq2(x.ctx().zero(), x.c1() + x.c1()); }

/// x^(q+1) = c0^2 - w c1^2.
inline Fq norm(Fq2 x) { return x.c0() * x.c0() - x.ctx().w() * x.c1() * x.c1(); }

/// The GF(q) coordinate of an element known to lie in GF(q).
Fq to_base(Fq2 x);

bool is_square(Fq x);
bool is_square(Fq2 x);
/// Quadratic character: 0, 1 or -1.
int legendre(Fq x);
int legendre(Fq2 x);

/// Square root with the smaller canonical index; throws InvalidParameters on a non-square.
Fq sqrt(Fq x);
Fq2 sqrt(Fq2 x);
/// Both roots (one when x = 0), ascending by canonical index.
std::vector<Fq> sqrt_all(Fq x);
std::vector<Fq2> sqrt_all(Fq2 x);

std::ostream& operator<<(std::ostream& os, Fq x);
std::ostream& operator<<(std::ostream& os, Fq2 x);

}  // namespace unital_lab
