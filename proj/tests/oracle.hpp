#pragma once

// Reference arithmetic for tests. Deliberately naive: GF(q) is polynomial
// arithmetic over GF(p) modulo a given polynomial, GF(q^2) is pairs over it,
// powers are repeated multiplication. Shares only the element encoding with
// the library (base-p digits for GF(q), c0 + q c1 for GF(q^2)).

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

struct NaiveField {
  std::uint32_t p = 0, n = 1, q = 0;
  std::vector<std::uint32_t> modulus;  // monic, constant term first; empty for n = 1
  std::uint32_t w = 0;                 // least generator of GF(q)^*

  NaiveField(std::uint32_t p_, std::uint32_t n_, std::vector<std::uint32_t> mod = {})
      : p(p_), n(n_), modulus(std::move(mod)) {
    q = 1;
    for (std::uint32_t i = 0; i < n; ++i) q *= p;
    if (n > 1 && modulus.size() != n + 1) throw std::invalid_argument("modulus degree");
    for (std::uint32_t c = 1; c < q; ++c)
      if (order(c) == q - 1) {
        w = c;
        break;
      }
  }

  std::vector<std::uint32_t> digits(std::uint32_t x) const {
    std::vector<std::uint32_t> d(n);
    for (std::uint32_t i = 0; i < n; ++i, x /= p) d[i] = x % p;
    return d;
  }
  std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
    std::uint32_t x = 0;
    for (std::uint32_t i = n; i-- > 0;) x = x * p + d[i];
    return x;
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p;
    return from_digits(da);
  }
  std::uint32_t neg(std::uint32_t a) const {
    auto d = digits(a);
    for (auto& c : d) c = (p - c) % p;
    return from_digits(d);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    if (n == 1) return static_cast<std::uint32_t>(prod[0]);
    // reduce with x^n = -(m_0 + ... + m_{n-1} x^{n-1})
    for (std::uint32_t k = 2 * n - 1; k >= n; --k) {
      std::uint64_t c = prod[k];
      prod[k] = 0;
      for (std::uint32_t i = 0; i < n; ++i) prod[k - n + i] = (prod[k - n + i] + c * (p - modulus[i] % p)) % p;
    }
    std::vector<std::uint32_t> out(n);
    for (std::uint32_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return from_digits(out);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t c = 1; c < q; ++c)
      if (mul(a, c) == 1) return c;
    throw std::domain_error("no inverse");
  }
  std::uint32_t order(std::uint32_t a) const {
    std::uint32_t r = a, k = 1;
    while (r != 1) {
      r = mul(r, a);
      ++k;
      if (k > q) return 0;
    }
    return k;
  }
  bool is_square(std::uint32_t a) const {
    for (std::uint32_t c = 0; c < q; ++c)
      if (mul(c, c) == a) return true;
    return false;
  }
  std::uint32_t from_int(std::int64_t k) const { return static_cast<std::uint32_t>(((k % p) + p) % p); }
};

// GF(q^2) = GF(q)[e]/(e^2 - w)
struct NaiveExt {
  const NaiveField& f;
  using E = std::pair<std::uint32_t, std::uint32_t>;

  explicit NaiveExt(const NaiveField& base) : f(base) {}

  std::uint32_t index(E x) const { return x.first + f.q * x.second; }
  E from_index(std::uint32_t i) const { return {i % f.q, i / f.q}; }
  E add(E a, E b) const { return {f.add(a.first, b.first), f.add(a.second, b.second)}; }
  E sub(E a, E b) const { return {f.sub(a.first, b.first), f.sub(a.second, b.second)}; }
  E neg(E a) const { return {f.neg(a.first), f.neg(a.second)}; }
  E mul(E a, E b) const {
    return {f.add(f.mul(a.first, b.first), f.mul(f.w, f.mul(a.second, b.second))),
            f.add(f.mul(a.first, b.second), f.mul(a.second, b.first))};
  }
  E pow(E a, std::uint64_t k) const {
    E r{1, 0};
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
  }
  E inv(E a) const {  // a^(q^2 - 2)
    for (std::uint32_t i = 1; i < f.q * f.q; ++i)
      if (mul(a, from_index(i)) == E{1, 0}) return from_index(i);
    throw std::domain_error("no inverse");
  }
  bool is_square(E a) const {
    for (std::uint32_t i = 0; i < f.q * f.q; ++i)
      if (mul(from_index(i), from_index(i)) == a) return true;
    return false;
  }
  bool in_base(E a) const { return a.second == 0; }
};

// U(a,b) membership straight from the defining set.
inline bool unital_contains(const NaiveExt& F, NaiveExt::E a, NaiveExt::E b, NaiveExt::E x, NaiveExt::E y,
                            NaiveExt::E z) {
  using E = NaiveExt::E;
  const E zero{0, 0};
  if (z == zero) return x == zero && y != zero;  // only T = (0,1,0) at infinity
  E zi = F.inv(z);
  E X = F.mul(x, zi), Y = F.mul(y, zi);
  E off = F.add(F.mul(a, F.mul(X, X)), F.mul(b, F.pow(X, F.f.q + 1)));
  return F.in_base(F.sub(Y, off));
}

// Discriminant (b - b^q)^2 + 4 a^(q+1), computed via powers.
inline std::uint32_t discriminant(const NaiveExt& F, NaiveExt::E a, NaiveExt::E b) {
  auto bq = F.pow(b, F.f.q);
  auto diff = F.sub(b, bq);
  auto d = F.add(F.mul(diff, diff), F.mul({F.f.from_int(4), 0}, F.pow(a, F.f.q + 1)));
  if (d.second != 0) throw std::logic_error("discriminant outside GF(q)");
  return d.first;
}

// Cyclotomic number (i,j)_k by definition.
inline std::uint64_t cyclotomic_number(const NaiveField& f, std::uint32_t k, std::uint32_t i, std::uint32_t j) {
  std::vector<std::uint32_t> cls(f.q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t l = 0; l < f.q - 1; ++l) {
    cls[cur] = l % k;
    cur = f.mul(cur, f.w);
  }
  std::uint64_t n = 0;
  for (std::uint32_t x = 1; x < f.q; ++x) {
    std::uint32_t x1 = f.add(x, 1);
    if (x1 == 0) continue;
    if (cls[x] == i % k && cls[x1] == j % k) ++n;
  }
  return n;
}

}  // namespace oracle
