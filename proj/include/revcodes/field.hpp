/*
 * Copyright 2026 The revcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file field.hpp
 * @brief Exact arithmetic in small finite fields GF(p^e).
 *
 * A field is either a prime field GF(p) or an extension F[y]/(f(y)) of another
 * field F by a monic irreducible f. Elements are stored as a single packed
 * integer: the coefficient vector (c_0, ..., c_{e-1}) over the base field is
 * encoded as sum c_i * |F|^i. Because |F| is itself a power of p, the base-p
 * digits of the packed value are exactly the prime-field coordinates, which
 * makes addition digit-wise (XOR in characteristic 2).
 *
 * Multiplication goes through log/antilog tables of a designated primitive
 * element, so every field is capped at a desk-scale order (default 4^6).
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "revcodes/errors.hpp"

namespace revcodes {

using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldStyle { prime, extension, tower };

inline constexpr std::uint32_t kDefaultMaxOrder = 4096;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Returns (p, e) with n = p^e, or nullopt if n is not a prime power.
inline std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto divs = prime_divisors(n);
  if (divs.size() != 1) return std::nullopt;
  std::uint32_t e = 0;
  while (n > 1) {
    n /= divs[0];
    ++e;
  }
  return std::pair{static_cast<std::uint32_t>(divs[0]), e};
}

}  // namespace detail

class Field {
  struct Private {};

 public:
  /// GF(p) with the least primitive root as the designated generator.
  static FieldPtr prime(std::uint32_t p, std::uint32_t max_order = kDefaultMaxOrder) {
    if (!detail::is_prime(p)) throw UnsupportedFieldError("GF(" + std::to_string(p) + "): order is not prime");
    if (p > max_order) throw UnsupportedFieldError("GF(" + std::to_string(p) + ") exceeds the table cap");
    auto f = std::make_shared<Field>(Private{});
    f->p_ = p;
    f->q_ = p;
    f->degree_ = 1;
    f->ext_degree_ = 1;
    f->style_ = FieldStyle::prime;
    f->build_add_table();
    std::optional<Elem> g;
    for (Elem c = 1; c < p && !g; ++c)
      if (f->order_by_iteration(c) == p - 1) g = c;
    f->build_log_tables(*g);
    return f;
  }

  /// base[y] / (modulus). `modulus` lists base-field coefficients low degree
  /// first and must be monic. Without an explicit primitive element the root
  /// y is used when it is primitive, otherwise the smallest primitive element.
  static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus, std::optional<Elem> primitive = std::nullopt,
                            std::uint32_t max_order = kDefaultMaxOrder) {
    if (!base) throw ValidationError("extension needs a base field");
    if (modulus.size() < 2) throw ValidationError("modulus must have degree >= 1");
    for (Elem c : modulus)
      if (!base->contains(c)) throw ValidationError("modulus coefficient outside the base field");
    if (modulus.back() != base->one()) throw ValidationError("modulus must be monic");
    const auto e = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= base->order();
      if (q > max_order) throw UnsupportedFieldError("extension exceeds the table cap of " + std::to_string(max_order));
    }
    if (!is_irreducible(*base, modulus)) throw ValidationError("modulus is reducible over " + base->name());

    auto f = std::make_shared<Field>(Private{});
    f->p_ = base->characteristic();
    f->q_ = static_cast<std::uint32_t>(q);
    f->degree_ = base->degree() * e;
    f->ext_degree_ = e;
    f->style_ = base->style() == FieldStyle::prime ? FieldStyle::extension : FieldStyle::tower;
    f->base_ = std::move(base);
    f->modulus_ = std::move(modulus);
    f->build_add_table();

    const Elem n1 = f->q_ - 1;
    Elem g = 0;
    if (primitive) {
      if (!f->contains(*primitive) || f->order_by_iteration(*primitive) != n1)
        throw ValidationError("designated element is not primitive in " + f->name());
      g = *primitive;
    } else {
      const Elem root = e == 1 ? f->base_->neg(f->modulus_[0]) : f->base_->order();
      if (root != 0 && f->order_by_iteration(root) == n1) {
        g = root;
      } else {
        for (Elem c = 1; c < f->q_; ++c) {
          if (f->order_by_iteration(c) == n1) {
            g = c;
            break;
          }
        }
      }
    }
    f->build_log_tables(g);
    return f;
  }

  /// Exhaustive factor search: true iff no monic polynomial of degree
  /// 1..deg/2 divides `poly`.
  static bool is_irreducible(const Field& base, std::span<const Elem> poly) {
    const std::size_t deg = poly.size() - 1;
    if (deg == 0) return false;
    if (deg == 1) return true;
    const std::uint32_t qb = base.order();
    for (std::size_t d = 1; d <= deg / 2; ++d) {
      std::vector<Elem> div(d + 1, 0);
      div[d] = base.one();
      std::uint64_t count = 1;
      for (std::size_t i = 0; i < d; ++i) count *= qb;
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t v = idx;
        for (std::size_t i = 0; i < d; ++i) {
          div[i] = static_cast<Elem>(v % qb);
          v /= qb;
        }
        if (base.poly_rem(poly, div).empty()) return false;
      }
    }
    return true;
  }

  explicit Field(Private) {}

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t order() const { return q_; }
  /// Degree over the prime field.
  std::uint32_t degree() const { return degree_; }
  /// Degree over the immediate base field.
  std::uint32_t extension_degree() const { return ext_degree_; }
  FieldStyle style() const { return style_; }
  const FieldPtr& base() const { return base_; }
  const std::vector<Elem>& modulus() const { return modulus_; }
  Elem primitive() const { return primitive_; }

  std::string name() const { return "GF(" + std::to_string(q_) + ")"; }

  bool contains(Elem a) const { return a < q_; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  /// The image of the integer n under Z -> GF(p) -> this field.
  Elem from_int(long long n) const {
    const long long r = ((n % p_) + p_) % p_;
    return static_cast<Elem>(r);
  }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
    return add_digits(a, b);
  }

  Elem neg(Elem a) const {
    if (p_ == 2) return a;
    Elem out = 0, scale = 1;
    while (a) {
      const Elem d = a % p_;
      out += ((p_ - d) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  Elem inv(Elem a) const {
    if (a == 0) throw DivisionByZeroError("inverse of zero in " + name());
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }

  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  Elem pow(Elem a, long long e) const {
    if (e == 0) return 1;
    if (a == 0) {
      if (e < 0) throw DivisionByZeroError("negative power of zero in " + name());
      return 0;
    }
    const long long n1 = q_ - 1;
    const long long r = (((static_cast<long long>(log_[a]) * (e % n1)) % n1) + n1) % n1;
    return exp_[static_cast<std::size_t>(r)];
  }

  /// primitive^e for any integer e.
  Elem exp(long long e) const {
    const long long n1 = q_ - 1;
    return exp_[static_cast<std::size_t>(((e % n1) + n1) % n1)];
  }

  /// The unique e in [0, q-2] with primitive^e = a.
  std::uint32_t dlog(Elem a) const {
    if (a == 0) throw NoLogarithmError("zero has no discrete logarithm");
    return log_[a];
  }

  std::uint32_t multiplicative_order(Elem a) const {
    if (a == 0) throw NoLogarithmError("zero has no multiplicative order");
    const std::uint32_t n1 = q_ - 1;
    return n1 / std::gcd(n1, log_[a]);
  }

  bool is_primitive(Elem a) const { return a != 0 && multiplicative_order(a) == q_ - 1; }

  /// Coefficients over the immediate base field, low degree first.
  std::vector<Elem> coeffs(Elem a) const {
    if (style_ == FieldStyle::prime) return {a};
    std::vector<Elem> out(ext_degree_);
    const Elem qb = base_->order();
    for (auto& c : out) {
      c = a % qb;
      a /= qb;
    }
    return out;
  }

  Elem from_coeffs(std::span<const Elem> cs) const {
    if (style_ == FieldStyle::prime) {
      if (cs.size() != 1 || cs[0] >= q_) throw ValidationError("bad coefficient vector for " + name());
      return cs[0];
    }
    if (cs.size() != ext_degree_) throw ValidationError("coefficient vector length must equal the extension degree");
    const Elem qb = base_->order();
    Elem out = 0;
    for (std::size_t i = cs.size(); i-- > 0;) {
      if (cs[i] >= qb) throw ValidationError("coefficient outside the base field");
      out = out * qb + cs[i];
    }
    return out;
  }

  /// Structural equality: same tower of moduli and same primitive element.
  bool same_as(const Field& o) const {
    if (this == &o) return true;
    if (q_ != o.q_ || p_ != o.p_ || style_ != o.style_ || modulus_ != o.modulus_ || primitive_ != o.primitive_)
      return false;
    if (!base_ || !o.base_) return !base_ && !o.base_;
    return base_->same_as(*o.base_);
  }

  /// Product computed from the polynomial definition, bypassing the tables.
  /// Used to build the tables and to cross-check them.
  Elem mul_by_definition(Elem a, Elem b) const {
    if (style_ == FieldStyle::prime) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    const auto ca = coeffs(a), cb = coeffs(b);
    std::vector<Elem> prod(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i)
      for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] = base_->add(prod[i + j], base_->mul(ca[i], cb[j]));
    auto rem = base_->poly_rem(prod, modulus_);
    rem.resize(ext_degree_, 0);
    return from_coeffs(rem);
  }

  /// Remainder of num by a monic divisor, over this field. Trailing zeros are
  /// trimmed; the zero polynomial is returned as an empty vector.
  std::vector<Elem> poly_rem(std::span<const Elem> num, std::span<const Elem> divisor) const {
    std::vector<Elem> r(num.begin(), num.end());
    const std::size_t dd = divisor.size() - 1;
    trim(r);
    while (!r.empty() && r.size() - 1 >= dd) {
      const Elem lead = r.back();
      const std::size_t shift = r.size() - 1 - dd;
      for (std::size_t i = 0; i <= dd; ++i) r[shift + i] = sub(r[shift + i], mul(lead, divisor[i]));
      trim(r);
    }
    return r;
  }

 private:
  static void trim(std::vector<Elem>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  }

  Elem add_digits(Elem a, Elem b) const {
    Elem out = 0, scale = 1;
    while (a || b) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  void build_add_table() {
    if (p_ == 2 || q_ > 1024) return;
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
  }

  // Multiplicative order of c computed by repeated multiplication from the
  // definition; 0 if c never returns to 1 within q-1 steps.
  std::uint32_t order_by_iteration(Elem c) const {
    if (c == 0) return 0;
    Elem x = c;
    for (std::uint32_t i = 1; i <= q_ - 1; ++i) {
      if (x == 1) return i;
      x = mul_by_definition(x, c);
    }
    return 0;
  }

  void build_log_tables(Elem g) {
    primitive_ = g;
    const std::uint32_t n1 = q_ - 1;
    exp_.assign(2 * static_cast<std::size_t>(n1), 0);
    log_.assign(q_, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < n1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_by_definition(x, g);
    }
    if (x != 1) throw InternalInconsistencyError("primitive element cycle did not close in " + name());
    for (std::uint32_t i = n1; i < 2 * n1; ++i) exp_[i] = exp_[i - n1];
  }

  std::uint32_t p_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t degree_ = 0;
  std::uint32_t ext_degree_ = 0;
  FieldStyle style_ = FieldStyle::prime;
  FieldPtr base_;
  std::vector<Elem> modulus_;
  Elem primitive_ = 1;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint16_t> add_table_;
};

// ---------------------------------------------------------------------------
// Canonical fields
// ---------------------------------------------------------------------------

namespace detail {

// Smallest monic degree-`deg` modulus over `base` (coefficients ordered by
// their packed value) that is irreducible, has a primitive root y, and
// satisfies `accept`.
template <typename Accept>
FieldPtr search_modulus(const FieldPtr& base, std::uint32_t deg, std::uint32_t max_order, Accept accept) {
  const std::uint32_t qb = base->order();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < deg; ++i) count *= qb;
  std::vector<Elem> mod(deg + 1, 0);
  mod[deg] = 1;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < deg; ++i) {
      mod[i] = static_cast<Elem>(v % qb);
      v /= qb;
    }
    if (mod[0] == 0 || !Field::is_irreducible(*base, mod)) continue;
    auto f = Field::extension(base, mod, std::nullopt, max_order);
    const Elem root = deg == 1 ? base->neg(mod[0]) : qb;
    if (f->primitive() != root) continue;
    if (accept(*f)) return f;
  }
  throw UnsupportedFieldError("no suitable modulus of degree " + std::to_string(deg) + " over " + base->name());
}

inline std::optional<std::uint32_t> log4(std::uint32_t q) {
  std::uint32_t k = 0;
  while (q > 1 && q % 4 == 0) {
    q /= 4;
    ++k;
  }
  if (q == 1 && k > 0) return k;
  return std::nullopt;
}

inline FieldPtr build_canonical(std::uint32_t q, std::uint32_t max_order) {
  auto pp = prime_power(q);
  if (!pp) throw UnsupportedFieldError("no field of order " + std::to_string(q));
  if (q > max_order) throw UnsupportedFieldError("GF(" + std::to_string(q) + ") exceeds the table cap");
  const auto [p, e] = *pp;
  if (e == 1) return Field::prime(p, max_order);
  const auto gf_p = Field::prime(p, max_order);
  if (q == 4) return Field::extension(gf_p, {1, 1, 1}, std::nullopt, max_order);
  if (auto k = log4(q)) {
    const auto gf4 = build_canonical(4, max_order);
    const Elem alpha = gf4->primitive();
    if (*k == 3) return Field::extension(gf4, {alpha, 1, 1, 1}, std::nullopt, max_order);
    return search_modulus(gf4, *k, max_order,
                          [&](const Field& f) { return f.pow(f.primitive(), (f.order() - 1) / 3) == alpha; });
  }
  switch (q) {
    case 8: return Field::extension(gf_p, {1, 1, 0, 1}, std::nullopt, max_order);
    case 9: return Field::extension(gf_p, {2, 1, 1}, std::nullopt, max_order);
    case 25: return Field::extension(gf_p, {2, 4, 1}, std::nullopt, max_order);
    case 27: return Field::extension(gf_p, {1, 2, 0, 1}, std::nullopt, max_order);
    default: return search_modulus(gf_p, e, max_order, [](const Field&) { return true; });
  }
}

}  // namespace detail

/**
 * The canonical field of order q. Instances are cached, so repeated calls
 * return the same pointer.
 *
 *  - prime q: GF(q) with the least primitive root;
 *  - q = 4: GF(2)[x]/(x^2+x+1), alpha = x;
 *  - q = 4^k, k >= 2: tower over GF(4). k = 3 uses y^3+y^2+y+alpha with
 *    gamma = y; other k use the first modulus whose root w is primitive and
 *    satisfies w^((4^k-1)/3) = alpha;
 *  - 8, 9, 25, 27: x^3+x+1, x^2+x+2, x^2+4x+2, x^3+2x+1 with w = x;
 *  - other prime powers: first primitive modulus over GF(p).
 */
inline FieldPtr canonical_field(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{q, max_order};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto f = detail::build_canonical(q, max_order);
  cache.emplace(key, f);
  return f;
}

/// Field of order q whose top-level modulus is replaced by `modulus` over
/// the canonical base (GF(4) for q = 4^k with k >= 2, else GF(p)).
inline FieldPtr field_with_modulus(std::uint32_t q, std::vector<Elem> modulus,
                                   std::uint32_t max_order = kDefaultMaxOrder) {
  auto pp = detail::prime_power(q);
  if (!pp) throw UnsupportedFieldError("no field of order " + std::to_string(q));
  const auto k = detail::log4(q);
  FieldPtr base = (k && *k >= 2) ? canonical_field(4, max_order) : canonical_field(pp->first, max_order);
  if (pp->second == 1) throw ValidationError("prime fields take no modulus");
  auto f = Field::extension(base, std::move(modulus), std::nullopt, max_order);
  if (f->order() != q) throw ValidationError("modulus degree does not give a field of order " + std::to_string(q));
  return f;
}

// ---------------------------------------------------------------------------
// Felt: an element bundled with its field
// ---------------------------------------------------------------------------

class Felt {
 public:
  Felt(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    if (!field_ || !field_->contains(value_)) throw ValidationError("element outside its field");
  }

  static Felt zero(FieldPtr f) { return {std::move(f), 0}; }
  static Felt one(FieldPtr f) { return {std::move(f), 1}; }
  static Felt primitive(FieldPtr f) {
    const Elem g = f->primitive();
    return {std::move(f), g};
  }

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  bool is_zero() const { return value_ == 0; }
  std::vector<Elem> coeffs() const { return field_->coeffs(value_); }

  Felt inv() const { return {field_, field_->inv(value_)}; }
  Felt pow(long long e) const { return {field_, field_->pow(value_, e)}; }

  friend Felt operator+(const Felt& a, const Felt& b) { return {a.field_, a.check(b).add(a.value_, b.value_)}; }
  friend Felt operator-(const Felt& a, const Felt& b) { return {a.field_, a.check(b).sub(a.value_, b.value_)}; }
  friend Felt operator*(const Felt& a, const Felt& b) { return {a.field_, a.check(b).mul(a.value_, b.value_)}; }
  friend Felt operator/(const Felt& a, const Felt& b) { return {a.field_, a.check(b).div(a.value_, b.value_)}; }
  Felt operator-() const { return {field_, field_->neg(value_)}; }

  friend bool operator==(const Felt& a, const Felt& b) {
    return a.value_ == b.value_ && a.field_->same_as(*b.field_);
  }

 private:
  const Field& check(const Felt& o) const {
    if (!field_->same_as(*o.field_))
      throw FieldMismatchError("operands from " + field_->name() + " and " + o.field_->name());
    return *field_;
  }

  FieldPtr field_;
  Elem value_;
};

inline std::uint32_t dlog(const Felt& a) { return a.field()->dlog(a.value()); }

/// All primitive elements, ordered by ascending exponent of the designated
/// primitive element.
inline std::vector<Elem> enumerate_primitive_elements(const Field& f) {
  std::vector<Elem> out;
  const std::uint32_t n1 = f.order() - 1;
  for (std::uint32_t e = 0; e < n1; ++e)
    if (std::gcd(e, n1) == 1) out.push_back(f.exp(e));
  return out;
}

/// omega^((4^k - 1)/3) for a field of order 4^k; generates the GF(4) subfield.
inline Elem subfield_alpha(const Field& f, Elem omega) {
  if (!detail::log4(f.order())) throw UnsupportedFieldError(f.name() + " is not of order 4^k");
  if (!f.is_primitive(omega)) throw ValidationError("omega must be primitive");
  return f.pow(omega, (f.order() - 1) / 3);
}

inline Elem subfield_alpha(const Field& f) { return subfield_alpha(f, f.primitive()); }

}  // namespace revcodes
