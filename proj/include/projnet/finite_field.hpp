// Copyright 2026 The projnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "projnet/error.hpp"

namespace projnet {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

struct PrimePower {
  std::uint32_t prime = 0;
  std::uint32_t exponent = 0;
};

/// Splits q = p^m; empty when q is not a prime power.
inline std::optional<PrimePower> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return PrimePower{static_cast<std::uint32_t>(q), 1};
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(p), m};
}

inline bool is_prime_power(std::uint64_t q) {
  return prime_power_decomposition(q).has_value();
}

inline std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> factors;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      factors.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;

namespace detail {

// Dense polynomials over GF(p), coefficients low-order first.
using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
  // Fermat; p is prime and a != 0.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

inline Poly poly_mod(Poly f, const Poly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inverse_mod_prime(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t factor = f.back() * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

inline bool has_divisor_of_degree(const Poly& f, std::uint32_t p,
                                  std::size_t degree) {
  // Enumerate all monic polynomials of the given degree.
  Poly divisor(degree + 1, 0);
  divisor[degree] = 1;
  while (true) {
    if (poly_mod(f, divisor, p).empty()) return true;
    std::size_t i = 0;
    while (i < degree) {
      if (++divisor[i] < p) break;
      divisor[i] = 0;
      ++i;
    }
    if (i == degree) return false;
  }
}

inline bool has_root(const Poly& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t value = 0;
    for (std::size_t i = f.size(); i-- > 0;) value = (value * x + f[i]) % p;
    if (value == 0) return true;
  }
  return false;
}

inline bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return true;
  if (has_root(f, p)) return false;
  for (std::size_t d = 2; d <= m / 2; ++d) {
    if (has_divisor_of_degree(f, p, d)) return false;
  }
  return true;
}

/// Lowest monic irreducible of degree m, ordering candidates by the integer
/// code of their lower coefficients.
inline Poly lowest_irreducible(std::uint32_t p, std::uint32_t m) {
  if (m == 1) return Poly{0, 1};
  Poly f(m + 1, 0);
  f[m] = 1;
  while (true) {
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < m) {
      if (++f[i] < p) break;
      f[i] = 0;
      ++i;
    }
    ensure(i < m, "no irreducible polynomial found");
  }
}

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  Poly modulus;
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> exp_table;  // 2(q-1) entries
  std::vector<std::uint32_t> log_table;  // q entries, log_table[0] unused

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return (a + b) % p;
    if (p == 2) return a ^ b;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    while (a != 0 || b != 0) {
      result += ((a % p + b % p) % p) * place;
      a /= p;
      b /= p;
      place *= p;
    }
    return result;
  }

  std::uint32_t neg(std::uint32_t a) const {
    if (m == 1) return a == 0 ? 0 : p - a;
    if (p == 2) return a;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    while (a != 0) {
      result += ((p - a % p) % p) * place;
      a /= p;
      place *= p;
    }
    return result;
  }

  // Slow multiplication used only while bootstrapping the log tables.
  std::uint32_t mul_direct(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) {
      return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    }
    Poly fa = decode(a), fb = decode(b);
    Poly product(fa.size() + fb.size(), 0);
    for (std::size_t i = 0; i < fa.size(); ++i) {
      for (std::size_t j = 0; j < fb.size(); ++j) {
        product[i + j] = static_cast<std::uint32_t>(
            (product[i + j] + std::uint64_t{fa[i]} * fb[j]) % p);
      }
    }
    return encode(poly_mod(std::move(product), modulus, p));
  }

  std::uint32_t pow_direct(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e > 0) {
      if (e & 1) result = mul_direct(result, a);
      a = mul_direct(a, a);
      e >>= 1;
    }
    return result;
  }

  Poly decode(std::uint32_t code) const {
    Poly f(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
      f[i] = code % p;
      code /= p;
    }
    return f;
  }

  std::uint32_t encode(const Poly& f) const {
    std::uint32_t code = 0;
    for (std::size_t i = f.size(); i-- > 0;) code = code * p + f[i];
    return code;
  }
};

inline std::shared_ptr<const FieldTables> build_tables(std::uint32_t p,
                                                       std::uint32_t m) {
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->m = m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  t->q = static_cast<std::uint32_t>(q);
  t->modulus = lowest_irreducible(p, m);

  const std::uint64_t group_order = q - 1;
  const auto factors = distinct_prime_factors(group_order);
  for (std::uint32_t g = 1; g < q; ++g) {
    bool generator = true;
    for (std::uint64_t r : factors) {
      if (t->pow_direct(g, group_order / r) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      t->generator = g;
      break;
    }
  }
  ensure(t->generator != 0, "field has no multiplicative generator");

  t->exp_table.resize(2 * group_order);
  t->log_table.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    t->exp_table[i] = x;
    t->exp_table[i + group_order] = x;
    t->log_table[x] = static_cast<std::uint32_t>(i);
    x = t->mul_direct(x, t->generator);
  }
  ensure(x == 1, "generator order mismatch");
  return t;
}

inline std::shared_ptr<const FieldTables> cached_tables(std::uint32_t p,
                                                        std::uint32_t m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>,
                  std::shared_ptr<const FieldTables>>
      cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{p, m}];
  if (!slot) slot = build_tables(p, m);
  return slot;
}

}  // namespace detail

class FieldElement;

/// GF(p^m) with elements encoded as integers: the polynomial
/// c_0 + c_1 x + ... + c_{m-1} x^{m-1} has code c_0 + c_1 p + ... .
/// Enumeration order is code order. Immutable and cheap to copy.
class GaloisField {
 public:
  static GaloisField create(std::uint64_t p, std::uint64_t m,
                            std::uint64_t cap = kDefaultFieldCap) {
    detail::require(is_prime(p), "characteristic " + std::to_string(p) +
                                     " is not prime");
    detail::require(m >= 1, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
      q *= p;
      detail::require(q <= cap, "field order exceeds cap of " +
                                    std::to_string(cap));
    }
    return GaloisField(detail::cached_tables(static_cast<std::uint32_t>(p),
                                             static_cast<std::uint32_t>(m)));
  }

  static GaloisField of_order(std::uint64_t q,
                              std::uint64_t cap = kDefaultFieldCap) {
    const auto pp = prime_power_decomposition(q);
    detail::require(pp.has_value(), "q must be a prime power (got " +
                                        std::to_string(q) + ")");
    return create(pp->prime, pp->exponent, cap);
  }

  std::uint32_t characteristic() const { return t_->p; }
  std::uint32_t degree() const { return t_->m; }
  std::uint32_t order() const { return t_->q; }

  /// Monic modulus, low-order coefficients first; {0, 1} (i.e. x) for m = 1.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  FieldElement element(std::uint32_t code) const;
  FieldElement zero() const;
  FieldElement one() const;
  std::vector<FieldElement> elements() const;
  FieldElement primitive_element() const;
  std::vector<FieldElement> nonzero_squares() const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return t_->add(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const { return t_->neg(a); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return t_->add(a, t_->neg(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return t_->exp_table[t_->log_table[a] + t_->log_table[b]];
  }
  std::uint32_t inv(std::uint32_t a) const {
    detail::require(a != 0, "inversion of zero");
    const std::uint32_t n = t_->q - 1;
    return t_->exp_table[(n - t_->log_table[a]) % n];
  }
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    return mul(a, inv(b));
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = t_->q - 1;
    return t_->exp_table[(std::uint64_t{t_->log_table[a]} * (e % n)) % n];
  }
  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(std::uint32_t a) const {
    detail::require(a != 0, "zero has no multiplicative order");
    std::uint64_t order = 1;
    std::uint32_t x = a;
    while (x != 1) {
      x = mul(x, a);
      ++order;
    }
    return order;
  }

  /// Human-readable polynomial form, e.g. "x+1" or "2x^2+1".
  std::string format(std::uint32_t code) const {
    if (t_->m == 1) return std::to_string(code);
    const auto f = t_->decode(code);
    std::string out;
    for (std::size_t i = f.size(); i-- > 0;) {
      if (f[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (f[i] != 1 || i == 0) out += std::to_string(f[i]);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

  friend bool operator==(const GaloisField& a, const GaloisField& b) {
    return a.t_->p == b.t_->p && a.t_->m == b.t_->m;
  }

 private:
  explicit GaloisField(std::shared_ptr<const detail::FieldTables> tables)
      : t_(std::move(tables)) {}

  std::shared_ptr<const detail::FieldTables> t_;
};

/// An element bound to its field; arithmetic across fields is rejected.
class FieldElement {
 public:
  FieldElement(GaloisField field, std::uint32_t code)
      : field_(std::move(field)), code_(code) {
    detail::require(code_ < field_.order(), "element code out of range");
  }

  const GaloisField& field() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  bool is_one() const { return code_ == 1; }

  FieldElement operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.add(code_, o.code_)};
  }
  FieldElement operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.sub(code_, o.code_)};
  }
  FieldElement operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.mul(code_, o.code_)};
  }
  FieldElement operator/(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.div(code_, o.code_)};
  }
  FieldElement operator-() const { return {field_, field_.neg(code_)}; }
  FieldElement inverse() const { return {field_, field_.inv(code_)}; }
  FieldElement pow(std::uint64_t e) const {
    return {field_, field_.pow(code_, e)};
  }

  std::string to_string() const { return field_.format(code_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.code_ == b.code_;
  }
  friend bool operator<(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return a.code_ < b.code_;
  }

 private:
  void check_same(const FieldElement& o) const {
    detail::require(field_ == o.field_,
                    "operands belong to different fields");
  }

  GaloisField field_;
  std::uint32_t code_;
};

inline FieldElement GaloisField::element(std::uint32_t code) const {
  return {*this, code};
}
inline FieldElement GaloisField::zero() const { return {*this, 0}; }
inline FieldElement GaloisField::one() const { return {*this, 1}; }

inline std::vector<FieldElement> GaloisField::elements() const {
  std::vector<FieldElement> all;
  all.reserve(order());
  for (std::uint32_t c = 0; c < order(); ++c) all.emplace_back(*this, c);
  return all;
}

/// First element, in enumeration order, whose powers cover all nonzero
/// elements.
inline FieldElement GaloisField::primitive_element() const {
  detail::require(order() >= 3, "primitive element requires q >= 3");
  return {*this, t_->generator};
}

/// {x^2 : x != 0}, sorted by code.
inline std::vector<FieldElement> GaloisField::nonzero_squares() const {
  std::vector<bool> seen(order(), false);
  for (std::uint32_t x = 1; x < order(); ++x) seen[mul(x, x)] = true;
  std::vector<FieldElement> squares;
  for (std::uint32_t c = 1; c < order(); ++c) {
    if (seen[c]) squares.emplace_back(*this, c);
  }
  return squares;
}

}  // namespace projnet
