#include "unital_lab/gfield.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <string>

namespace unital_lab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  auto factors = prime_factors(q);
  if (factors.size() != 1) return std::nullopt;
  std::uint32_t exp = 0;
  for (std::uint64_t r = q; r > 1; r /= factors[0]) ++exp;
  return std::make_pair(static_cast<std::uint32_t>(factors[0]), exp);
}

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& modulus_table() {
  static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
      {{3, 2}, {2, 2, 1}},          {{5, 2}, {2, 4, 1}},    {{7, 2}, {3, 6, 1}},
      {{11, 2}, {2, 7, 1}},         {{13, 2}, {2, 12, 1}},  {{3, 3}, {1, 2, 0, 1}},
      {{5, 3}, {3, 3, 0, 1}},       {{3, 4}, {2, 0, 0, 2, 1}}, {{3, 5}, {1, 2, 0, 0, 0, 1}},
  };
  return table;
}

std::vector<std::uint32_t> digits(std::uint32_t v, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

}  // namespace

std::uint64_t FieldCtx::default_max_order() {
  if (const char* env = std::getenv("UNITAL_LAB_MAX_ORDER"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != nullptr && *end == '\0' && v > 0) return v;
    throw InvalidParameters(std::string("UNITAL_LAB_MAX_ORDER is not a positive integer: ") + env);
  }
  return kDefaultMaxOrder;
}

std::vector<std::uint32_t> FieldCtx::tabulated_modulus(std::uint32_t p, std::uint32_t exp) {
  auto it = modulus_table().find({p, exp});
  return it == modulus_table().end() ? std::vector<std::uint32_t>{} : it->second;
}

CtxPtr FieldCtx::make(std::uint32_t p, std::uint32_t exp) { return make(p, exp, default_max_order()); }

CtxPtr FieldCtx::for_order(std::uint64_t q) {
  auto pp = prime_power(q);
  if (!pp) throw InvalidParameters("field order " + std::to_string(q) + " is not a prime power");
  return make(pp->first, pp->second);
}

CtxPtr FieldCtx::make(std::uint32_t p, std::uint32_t exp, std::uint64_t max_order) {
  if (p == 2) throw InvalidParameters("characteristic 2 is not supported");
  if (!is_prime(p)) throw InvalidParameters("p = " + std::to_string(p) + " is not prime");
  if (exp == 0) throw InvalidParameters("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    q *= p;
    if (q > (std::uint64_t{1} << 31)) throw ResourceCap("field order overflows");
  }
  if (q * q > max_order)
    throw ResourceCap("q^2 = " + std::to_string(q * q) + " exceeds table bound " + std::to_string(max_order));

  std::shared_ptr<FieldCtx> ctx(new FieldCtx());
  ctx->p_ = p;
  ctx->exp_ = exp;
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->q2_ = static_cast<std::uint32_t>(q * q);
  if (exp > 1) {
    ctx->modulus_ = tabulated_modulus(p, exp);
    if (ctx->modulus_.empty())
      throw InvalidParameters("no irreducible polynomial tabulated for " + std::to_string(p) + "^" +
                              std::to_string(exp));
  }
  ctx->build_base_field();
  ctx->build_extension_field();
  return ctx;
}

std::uint32_t FieldCtx::mul_q_raw(std::uint32_t a, std::uint32_t b) const {
  if (exp_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
  auto da = digits(a, p_, exp_);
  auto db = digits(b, p_, exp_);
  std::vector<std::uint64_t> prod(2 * exp_ - 1, 0);
  for (std::uint32_t i = 0; i < exp_; ++i)
    for (std::uint32_t j = 0; j < exp_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
  for (auto& c : prod) c %= p_;
  // Reduce by the monic modulus from the top.
  for (std::size_t deg = prod.size() - 1; deg >= exp_; --deg) {
    std::uint64_t lead = prod[deg];
    if (lead != 0) {
      for (std::uint32_t i = 0; i <= exp_; ++i) {
        std::size_t pos = deg - exp_ + i;
        prod[pos] = (prod[pos] + (p_ - lead) * modulus_[i]) % p_;
      }
    }
  }
  std::vector<std::uint32_t> out(exp_);
  for (std::uint32_t i = 0; i < exp_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return from_digits(out, p_);
}

void FieldCtx::build_base_field() {
  if (exp_ > 1) {
    add_q_.resize(std::size_t{q_} * q_);
    neg_q_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
      auto da = digits(a, p_, exp_);
      std::vector<std::uint32_t> dn(exp_);
      for (std::uint32_t i = 0; i < exp_; ++i) dn[i] = (p_ - da[i]) % p_;
      neg_q_[a] = from_digits(dn, p_);
      for (std::uint32_t b = 0; b < q_; ++b) {
        auto db = digits(b, p_, exp_);
        std::vector<std::uint32_t> ds(exp_);
        for (std::uint32_t i = 0; i < exp_; ++i) ds[i] = (da[i] + db[i]) % p_;
        add_q_[std::size_t{a} * q_ + b] = from_digits(ds, p_);
      }
    }
  }

  const std::uint32_t order = q_ - 1;
  const auto factors = prime_factors(order);
  auto pow_raw = [&](std::uint32_t base, std::uint64_t n) {
    std::uint32_t result = 1;
    while (n > 0) {
      if (n & 1) result = mul_q_raw(result, base);
      base = mul_q_raw(base, base);
      n >>= 1;
    }
    return result;
  };
  w_ = 0;
  for (std::uint32_t cand = 1; cand < q_ && w_ == 0; ++cand) {
    if (pow_raw(cand, order) != 1) continue;
    bool primitive = true;
    for (auto r : factors)
      if (pow_raw(cand, order / r) == 1) primitive = false;
    if (primitive) w_ = cand;
  }
  if (w_ == 0) throw InvalidParameters("modulus is not irreducible: GF(q)^* has no generator");

  log_q_.assign(q_, 0);
  exp_q_.assign(2 * std::size_t{order}, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_q_[i] = cur;
    exp_q_[i + order] = cur;
    log_q_[cur] = i;
    cur = mul_q_raw(cur, w_);
  }
  if (cur != 1) throw InvariantViolation("generator of GF(q)^* does not cycle back to 1");
}

void FieldCtx::build_extension_field() {
  const std::uint32_t order = q2_ - 1;
  // Multiplication straight from the basis relation e^2 = w, used before the
  // GF(q^2) tables exist.
  auto mul_raw = [&](Pair a, Pair b) {
    Fq a0{this, a.c0}, a1{this, a.c1}, b0{this, b.c0}, b1{this, b.c1};
    return Pair{(a0 * b0 + w() * a1 * b1).index(), (a0 * b1 + a1 * b0).index()};
  };
  auto pow_raw = [&](Pair base, std::uint64_t n) {
    Pair result{1, 0};
    while (n > 0) {
      if (n & 1) result = mul_raw(result, base);
      base = mul_raw(base, base);
      n >>= 1;
    }
    return result;
  };
  auto is_one = [](Pair x) { return x.c0 == 1 && x.c1 == 0; };

  const auto factors = prime_factors(order);
  const std::uint64_t half = (std::uint64_t{q_} + 1) / 2;
  g_ = 0;
  for (std::uint32_t idx = 1; idx < q2_ && g_ == 0; ++idx) {
    Pair cand{idx % q_, idx / q_};
    Pair root = pow_raw(cand, half);
    if (root.c0 != 0 || root.c1 != 1) continue;  // need g^((q+1)/2) = e
    bool primitive = true;
    for (auto r : factors)
      if (is_one(pow_raw(cand, order / r))) primitive = false;
    if (primitive) g_ = idx;
  }
  if (g_ == 0) throw InvariantViolation("no generator g of GF(q^2)^* with g^((q+1)/2) = e");

  log_q2_.assign(q2_, 0);
  exp_q2_.assign(2 * std::size_t{order}, Pair{0, 0});
  Pair gen{g_ % q_, g_ / q_};
  Pair cur{1, 0};
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_q2_[i] = cur;
    exp_q2_[i + order] = cur;
    log_q2_[cur.c0 + q_ * cur.c1] = i;
    cur = mul_raw(cur, gen);
  }
  if (!is_one(cur)) throw InvariantViolation("generator of GF(q^2)^* does not cycle back to 1");
}

Fq FieldCtx::fq(std::uint32_t index) const {
  if (index >= q_) throw InvalidParameters("GF(q) index " + std::to_string(index) + " out of range");
  return {this, index};
}

Fq FieldCtx::fq_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

Fq2 FieldCtx::fq2(std::uint32_t c0, std::uint32_t c1) const {
  if (c0 >= q_ || c1 >= q_) throw InvalidParameters("GF(q^2) coordinate out of range");
  return {this, c0, c1};
}

std::vector<Fq> FieldCtx::elements_q() const {
  std::vector<Fq> v;
  v.reserve(q_);
  for (std::uint32_t i = 0; i < q_; ++i) v.emplace_back(this, i);
  return v;
}

std::vector<Fq> FieldCtx::units_q() const {
  auto v = elements_q();
  v.erase(v.begin());
  return v;
}

std::vector<Fq2> FieldCtx::elements_q2() const {
  std::vector<Fq2> v;
  v.reserve(q2_);
  for (std::uint32_t i = 0; i < q2_; ++i) v.push_back(fq2_index(i));
  return v;
}

std::vector<Fq2> FieldCtx::units_q2() const {
  auto v = elements_q2();
  v.erase(v.begin());
  return v;
}

Fq FieldCtx::pow(Fq a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n < 0) throw std::domain_error("negative power of zero");
    return n == 0 ? one() : zero();
  }
  const std::int64_t order = q_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_q_[a.index()]) * (n % order)) % order;
  if (l < 0) l += order;
  return {this, exp_q_[l]};
}

Fq FieldCtx::w_pow(std::int64_t n) const {
  const std::int64_t order = q_ - 1;
  std::int64_t l = n % order;
  if (l < 0) l += order;
  return {this, exp_q_[l]};
}

Fq2 FieldCtx::pow(Fq2 a, std::int64_t n) const {
  if (a.is_zero()) {
    if (n < 0) throw std::domain_error("negative power of zero");
    return n == 0 ? one2() : zero2();
  }
  const std::int64_t order = q2_ - 1;
  std::int64_t l = (static_cast<std::int64_t>(log_q2_[a.index()]) * (n % order)) % order;
  if (l < 0) l += order;
  return from_pair(exp_q2_[l]);
}

Fq2 FieldCtx::g_pow(std::int64_t n) const {
  const std::int64_t order = q2_ - 1;
  std::int64_t l = n % order;
  if (l < 0) l += order;
  return from_pair(exp_q2_[l]);
}

Fq to_base(Fq2 x) {
  if (!x.in_base_field()) throw InvalidParameters("element is not in GF(q)");
  return x.c0();
}

bool is_square(Fq x) { return x.is_zero() || x.ctx().log(x) % 2 == 0; }
bool is_square(Fq2 x) { return x.is_zero() || x.ctx().log(x) % 2 == 0; }

int legendre(Fq x) { return x.is_zero() ? 0 : (is_square(x) ? 1 : -1); }
int legendre(Fq2 x) { return x.is_zero() ? 0 : (is_square(x) ? 1 : -1); }

std::vector<Fq> sqrt_all(Fq x) {
  if (x.is_zero()) return {x};
  if (!is_square(x)) throw InvalidParameters("square root of a non-square in GF(q)");
  Fq r = x.ctx().w_pow(x.ctx().log(x) / 2);
  Fq s = -r;
  return r < s ? std::vector<Fq>{r, s} : std::vector<Fq>{s, r};
}

std::vector<Fq2> sqrt_all(Fq2 x) {
  if (x.is_zero()) return {x};
  if (!is_square(x)) throw InvalidParameters("square root of a non-square in GF(q^2)");
  Fq2 r = x.ctx().g_pow(x.ctx().log(x) / 2);
  Fq2 s = -r;
  return r < s ? std::vector<Fq2>{r, s} : std::vector<Fq2>{s, r};
}

Fq sqrt(Fq x) { return sqrt_all(x).front(); }
Fq2 sqrt(Fq2 x) { return sqrt_all(x).front(); }

std::ostream& operator<<(std::ostream& os, Fq x) { return os << x.index(); }
std::ostream& operator<<(std::ostream& os, Fq2 x) { return os << '(' << x.c0().index() << ',' << x.c1().index() << ')'; }

}  // namespace unital_lab
