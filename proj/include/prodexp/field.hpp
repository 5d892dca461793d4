// Copyright 2026 The prodexp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Finite fields GF(p^e) with q <= 2^16.
//
// Elements are integers 0..q-1 in the canonical element order: the element
// with index i is the polynomial sum_j c_j x^j where (c_0, c_1, ...) are the
// base-p digits of i. Extension fields are reduced modulo a fixed primitive
// polynomial (Conway polynomials for the small (p, e) in the table below,
// otherwise the lexicographically smallest primitive polynomial).

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <string>
#include <vector>

#include "prodexp/errors.hpp"

namespace prodexp {

using Elem = std::uint16_t;

namespace detail {

inline bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct ConwayEntry {
  std::uint32_t p;
  std::uint32_t e;
  std::vector<int> coeffs;  // low to high, monic
};

inline const std::vector<ConwayEntry>& conway_table() {
  static const std::vector<ConwayEntry> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {2, 7, {1, 1, 0, 0, 0, 0, 0, 1}},
      {2, 8, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {2, 9, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
      {2, 10, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
      {2, 11, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 12, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
      {2, 13, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 14, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
      {2, 15, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {2, 16, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {3, 5, {1, 2, 0, 0, 0, 1}},
      {3, 6, {2, 2, 1, 0, 2, 0, 1}},
      {3, 7, {1, 0, 2, 0, 0, 0, 0, 1}},
      {3, 8, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
      {5, 2, {2, 4, 1}},
      {5, 3, {3, 3, 0, 1}},
      {5, 4, {2, 4, 4, 0, 1}},
      {7, 2, {3, 6, 1}},
      {7, 3, {4, 0, 6, 1}},
      {11, 2, {2, 7, 1}},
      {13, 2, {2, 12, 1}},
  };
  return table;
}

struct FieldData {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t q = 2;
  std::vector<int> modulus;          // low to high, monic, degree e (e > 1 only)
  std::vector<Elem> exp;             // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;    // log[a] for a != 0
  std::vector<Elem> neg;
  std::vector<Elem> add_table;       // q*q when q <= 256, else empty
  Elem primitive = 1;

  Elem add_slow(Elem a, Elem b) const {
    if (p == 2) return static_cast<Elem>(a ^ b);
    std::uint32_t r = 0, scale = 1, x = a, y = b;
    for (std::uint32_t i = 0; i < e; ++i) {
      r += ((x % p + y % p) % p) * scale;
      x /= p;
      y /= p;
      scale *= p;
    }
    return static_cast<Elem>(r);
  }
};

// Multiplies the polynomial with digit vector `a` by x modulo `mod`.
inline void mul_by_x(std::vector<int>& a, const std::vector<int>& mod, int p) {
  const std::size_t e = a.size();
  int top = a[e - 1];
  for (std::size_t i = e - 1; i > 0; --i) a[i] = a[i - 1];
  a[0] = 0;
  for (std::size_t i = 0; i < e; ++i) a[i] = ((a[i] - top * mod[i]) % p + p) % p;
}

inline std::uint32_t digits_to_index(const std::vector<int>& d, std::uint32_t p) {
  std::uint32_t r = 0;
  for (std::size_t i = d.size(); i-- > 0;) r = r * p + static_cast<std::uint32_t>(d[i]);
  return r;
}

// Powers of x modulo `mod`; empty if x does not have order q-1.
inline std::vector<Elem> power_table(const std::vector<int>& mod, std::uint32_t p, std::uint32_t e,
                                     std::uint32_t q) {
  std::vector<Elem> pw(q - 1);
  std::vector<char> seen(q, 0);
  std::vector<int> cur(e, 0);
  cur[0] = 1;
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    auto idx = digits_to_index(cur, p);
    if (idx == 0 || seen[idx]) return {};
    seen[idx] = 1;
    pw[i] = static_cast<Elem>(idx);
    mul_by_x(cur, mod, static_cast<int>(p));
  }
  if (digits_to_index(cur, p) != 1) return {};
  return pw;
}

}  // namespace detail

/// A finite field handle. Cheap to copy; the tables are shared and immutable.
class Field {
 public:
  /// GF(2).
  Field() : d_(gf2().d_) {}

  static Field create(std::uint32_t p, std::uint32_t e, std::uint32_t cap = 1u << 16) {
    detail::require(detail::is_prime(p), "field characteristic " + std::to_string(p) + " is not prime");
    detail::require(e >= 1, "field extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > cap || q > (1u << 16)) throw CapExceeded("field order p^e exceeds cap " + std::to_string(cap));
    }
    // Construction verifies the axioms exhaustively, so fields are memoized.
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, Field> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, e});
    if (it == cache.end()) it = cache.emplace(std::make_pair(p, e), make(p, e, static_cast<std::uint32_t>(q))).first;
    return it->second;
  }

  /// Field of order q, q a prime power.
  static Field of_order(std::uint32_t q) {
    detail::require(q >= 2, "field order must be at least 2");
    std::uint32_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    detail::require(r == 1, std::to_string(q) + " is not a prime power");
    return create(p, e);
  }

  std::uint32_t p() const { return d_->p; }
  std::uint32_t e() const { return d_->e; }
  std::uint32_t q() const { return d_->q; }
  const std::vector<int>& modulus() const { return d_->modulus; }
  /// Canonical primitive element: the smallest primitive root for prime
  /// fields, the class of x for extension fields.
  Elem primitive() const { return d_->primitive; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (!d_->add_table.empty()) return d_->add_table[static_cast<std::size_t>(a) * d_->q + b];
    return d_->add_slow(a, b);
  }
  Elem neg(Elem a) const { return d_->neg[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return d_->exp[d_->log[a] + d_->log[b]];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw PreconditionError("inverse of zero");
    return d_->exp[(d_->q - 1 - d_->log[a]) % (d_->q - 1)];
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// g^k for the canonical primitive element g.
  Elem power_of_primitive(std::uint64_t k) const { return d_->exp[k % (d_->q - 1)]; }
  Elem pow(Elem a, std::uint64_t k) const {
    if (k == 0) return 1;
    if (a == 0) return 0;
    return d_->exp[(static_cast<std::uint64_t>(d_->log[a]) * k) % (d_->q - 1)];
  }
  Elem from_int(std::int64_t v) const {
    auto r = static_cast<std::int64_t>(d_->p);
    return static_cast<Elem>(((v % r) + r) % r);
  }

  bool operator==(const Field& o) const { return d_ == o.d_ || (d_->p == o.d_->p && d_->e == o.d_->e); }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string name() const {
    return "GF(" + std::to_string(d_->q) + ")";
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}

  static Field make(std::uint32_t p, std::uint32_t e, std::uint32_t q);
  static const Field& gf2() {
    static const Field f = make(2, 1, 2);
    return f;
  }

  std::shared_ptr<const detail::FieldData> d_;
};

inline Field Field::make(std::uint32_t p, std::uint32_t e, std::uint32_t q) {
  auto d = std::make_shared<detail::FieldData>();
  d->p = p;
  d->e = e;
  d->q = q;
  std::vector<Elem> powers;
  if (e == 1) {
    for (std::uint32_t g = 1; g < p && powers.empty(); ++g) {
      if (p == 2) {
        powers = {1};
        break;
      }
      std::vector<Elem> pw(p - 1);
      std::vector<char> seen(p, 0);
      std::uint32_t cur = 1;
      bool ok = true;
      for (std::uint32_t i = 0; i + 1 < p; ++i) {
        if (seen[cur]) {
          ok = false;
          break;
        }
        seen[cur] = 1;
        pw[i] = static_cast<Elem>(cur);
        cur = cur * g % p;
      }
      if (ok && cur == 1) powers = std::move(pw);
    }
    d->primitive = powers.size() > 1 ? powers[1] : 1;
  } else {
    for (const auto& entry : detail::conway_table()) {
      if (entry.p == p && entry.e == e) {
        powers = detail::power_table(entry.coeffs, p, e, q);
        if (powers.empty())
          throw TheoryViolation("tabulated polynomial for GF(" + std::to_string(q) + ") is not primitive");
        d->modulus = entry.coeffs;
      }
    }
    if (powers.empty()) {
      // Lexicographically smallest monic primitive polynomial of degree e.
      std::vector<int> mod(e + 1, 0);
      mod[e] = 1;
      for (std::uint32_t code = 1; code < q && powers.empty(); ++code) {
        std::uint32_t c = code;
        for (std::uint32_t i = 0; i < e; ++i) {
          mod[i] = static_cast<int>(c % p);
          c /= p;
        }
        if (mod[0] == 0) continue;
        powers = detail::power_table(mod, p, e, q);
      }
      if (powers.empty()) throw TheoryViolation("no primitive polynomial found");
      d->modulus = mod;
    }
    d->primitive = static_cast<Elem>(p);  // the class of x
  }

  d->exp.resize(2 * (q - 1));
  d->log.assign(q, 0);
  for (std::uint32_t i = 0; i + 1 < q; ++i) {
    d->exp[i] = powers[i];
    d->exp[i + q - 1] = powers[i];
    d->log[powers[i]] = i;
  }
  d->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    if (p == 2) {
      d->neg[a] = static_cast<Elem>(a);
      continue;
    }
    std::uint32_t r = 0, scale = 1, x = a;
    for (std::uint32_t i = 0; i < e; ++i) {
      r += ((p - x % p) % p) * scale;
      x /= p;
      scale *= p;
    }
    d->neg[a] = static_cast<Elem>(r);
  }

  if (q <= 256) {
    d->add_table.resize(static_cast<std::size_t>(q) * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        d->add_table[a * q + b] = d->add_slow(static_cast<Elem>(a), static_cast<Elem>(b));
  }

  Field f(std::move(d));
  if (q <= 256) {
    // Exhaustive axiom check over the tables.
    for (std::uint32_t a = 0; a < q; ++a) {
      auto ea = static_cast<Elem>(a);
      detail::ensure(f.add(ea, 0) == ea && f.mul(ea, 1) == ea, "field identity axiom");
      detail::ensure(f.add(ea, f.neg(ea)) == 0, "additive inverse axiom");
      if (a != 0) detail::ensure(f.mul(ea, f.inv(ea)) == 1, "multiplicative inverse axiom");
      for (std::uint32_t b = 0; b < q; ++b) {
        auto eb = static_cast<Elem>(b);
        detail::ensure(f.add(ea, eb) == f.add(eb, ea) && f.mul(ea, eb) == f.mul(eb, ea), "commutativity");
        for (std::uint32_t c = 0; c < q; ++c) {
          auto ec = static_cast<Elem>(c);
          detail::ensure(f.add(f.add(ea, eb), ec) == f.add(ea, f.add(eb, ec)), "additive associativity");
          detail::ensure(f.mul(f.mul(ea, eb), ec) == f.mul(ea, f.mul(eb, ec)), "multiplicative associativity");
          detail::ensure(f.mul(ea, f.add(eb, ec)) == f.add(f.mul(ea, eb), f.mul(ea, ec)), "distributivity");
        }
      }
    }
  }
  return f;
}

inline Field field_create(std::uint32_t p, std::uint32_t e, std::uint32_t cap = 1u << 16) {
  return Field::create(p, e, cap);
}

}  // namespace prodexp
