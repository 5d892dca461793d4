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

#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/qbinom.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"

namespace prodexp {

inline constexpr std::uint64_t kDefaultEnumCap = std::uint64_t{1} << 24;

/// A linear code C in F_q^n. The generator is kept in reduced row-echelon
/// form and the parity-check matrix is the RREF basis of the dual.
class LinearCode {
 public:
  LinearCode() = default;
  explicit LinearCode(Subspace generator)
      : gen_(std::move(generator)), parity_(gen_.dual().basis()) {}

  static LinearCode from_generator(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
    return LinearCode(Subspace::span_of(f, n, rows));
  }
  static LinearCode from_generator(const Matrix& g) { return LinearCode(Subspace::span_of(g)); }
  /// The code {x : H x = 0}.
  static LinearCode from_parity(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
    return LinearCode(kernel(Matrix::from_rows(f, rows, n)));
  }
  static LinearCode from_parity(const Matrix& h) { return LinearCode(kernel(h)); }

  const Field& field() const { return gen_.field(); }
  std::size_t n() const { return gen_.ambient(); }
  std::size_t k() const { return gen_.dim(); }
  std::size_t r() const { return n() - k(); }
  const Subspace& generator() const { return gen_; }
  const Matrix& generator_matrix() const { return gen_.basis(); }
  const Matrix& parity_check() const { return parity_; }
  bool is_full() const { return k() == n(); }
  bool is_zero() const { return k() == 0; }

  bool contains(std::span<const Elem> v) const { return gen_.contains(v); }

  Rational rate() const { return Rational(static_cast<std::int64_t>(k()), static_cast<std::int64_t>(n())); }
  /// 1 - k/n
  Rational epsilon() const { return Rational(1) - rate(); }

  const std::optional<std::size_t>& cached_distance() const { return distance_; }

  /// Copy of this code with its minimum distance computed and cached.
  LinearCode with_distance(std::uint64_t cap = kDefaultEnumCap) const;

  bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

 private:
  Subspace gen_;
  Matrix parity_;
  std::optional<std::size_t> distance_;
};

inline LinearCode dual(const LinearCode& c) {
  LinearCode d(c.generator().dual());
  detail::ensure((c.generator_matrix() * d.generator_matrix().transpose()).is_zero(), "dual code orthogonality");
  return d;
}

inline LinearCode repetition_code(const Field& f, std::size_t n) {
  return LinearCode::from_generator(f, n, {Vec(n, 1)});
}

/// Kernel of the all-ones row.
inline LinearCode parity_code(const Field& f, std::size_t n) {
  return LinearCode::from_parity(f, n, {Vec(n, 1)});
}

inline LinearCode full_code(const Field& f, std::size_t n) { return LinearCode(Subspace::full(f, n)); }
inline LinearCode zero_code(const Field& f, std::size_t n) { return LinearCode(Subspace(f, n)); }

namespace detail {

inline BigInt binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Krawtchouk polynomial K_w(j) for length n over F_q.
inline BigInt krawtchouk(std::uint64_t n, std::uint64_t q, std::uint64_t w, std::uint64_t j) {
  BigInt s = 0;
  for (std::uint64_t t = 0; t <= w; ++t) {
    BigInt term = binom(j, t) * binom(n - j, w - t) * big_pow(q - 1, w - t);
    if (t % 2) s -= term; else s += term;
  }
  return s;
}

inline std::vector<std::uint64_t> weight_distribution_by_enumeration(const Subspace& s) {
  std::vector<std::uint64_t> a(s.ambient() + 1, 0);
  for_each_vector(s, [&](const Vec& v) { ++a[weight(v)]; });
  return a;
}

}  // namespace detail

/// Exact minimum nonzero weight. Enumerates the code when q^k fits the cap,
/// otherwise derives the weight distribution from the dual (MacWilliams).
/// The zero code gets the sentinel n + 1.
inline std::size_t min_distance(const LinearCode& c, std::uint64_t cap = kDefaultEnumCap) {
  if (c.is_zero()) return c.n() + 1;
  const std::uint64_t q = c.field().q();
  std::optional<std::uint64_t> own_size;
  try {
    own_size = checked_power(q, c.k(), cap, "min_distance");
  } catch (const CapExceeded&) {
  }
  if (own_size) {
    std::size_t best = c.n() + 1;
    for_each_vector(c.generator(), [&](const Vec& v) {
      std::size_t w = weight(v);
      if (w != 0 && w < best) best = w;
    });
    return best;
  }
  Subspace d = c.generator().dual();
  d.size(cap);  // throws when the dual is too large as well
  auto b = detail::weight_distribution_by_enumeration(d);
  const BigInt dual_size = big_pow(q, d.dim());
  for (std::size_t w = 1; w <= c.n(); ++w) {
    BigInt sum = 0;
    for (std::size_t j = 0; j <= c.n(); ++j)
      if (b[j]) sum += BigInt(b[j]) * detail::krawtchouk(c.n(), q, w, j);
    detail::ensure(sum % dual_size == 0, "MacWilliams transform is not integral");
    if (sum != 0) return w;
  }
  throw TheoryViolation("nonzero code without a nonzero codeword");
}

inline LinearCode LinearCode::with_distance(std::uint64_t cap) const {
  LinearCode c = *this;
  c.distance_ = min_distance(*this, cap);
  return c;
}

/// Greedy lowest-index subset I of S on which the generator has rank k, or
/// nothing when the generator restricted to S has rank below k.
inline std::optional<std::vector<std::size_t>> information_set(const LinearCode& c,
                                                               const std::vector<std::size_t>& s) {
  std::vector<std::size_t> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i : sorted) detail::require(i < c.n(), "information set index out of range");
  std::vector<std::size_t> chosen;
  const Matrix gt = c.generator_matrix().transpose();  // n x k: rows are generator columns
  Matrix acc(c.field(), 0, c.k());
  for (std::size_t i : sorted) {
    if (chosen.size() == c.k()) break;
    Matrix trial = vstack(acc, gt.select_rows(std::vector<std::size_t>{i}));
    if (rank(trial) > chosen.size()) {
      acc = std::move(trial);
      chosen.push_back(i);
    }
  }
  if (chosen.size() < c.k()) {
    if (c.cached_distance())
      detail::ensure(sorted.size() <= c.n() - std::min(c.n(), *c.cached_distance()),
                     "a set larger than n - d must contain an information set");
    return std::nullopt;
  }
  return chosen;
}

/// The unique codeword c with c[info[t]] = values[t], where `info` is an
/// information set of the code.
inline Vec encode_on_positions(const LinearCode& c, const std::vector<std::size_t>& info,
                               std::span<const Elem> values) {
  detail::require(info.size() == c.k() && values.size() == c.k(), "positions must form an information set");
  const std::size_t k = c.k();
  // Solve m * G_I = values, written as G_I^T m^T = values^T.
  Matrix sys(c.field(), k, k + 1);
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t r = 0; r < k; ++r) sys(t, r) = c.generator_matrix()(r, info[t]);
    sys(t, k) = values[t];
  }
  RrefResult red = rref(sys, k);
  detail::require(red.rank == k, "positions are not an information set");
  Vec msg(k);
  for (std::size_t r = 0; r < k; ++r) msg[red.pivots[r]] = red.reduced(r, k);
  return c.generator().combine(msg);
}

/// RS_q^k: evaluations of polynomials of degree < k at 0, 1, g, g^2, ...,
/// g^{q-2} for the canonical primitive element g.
inline std::vector<Elem> evaluation_points(const Field& f) {
  std::vector<Elem> pts{0};
  for (std::uint32_t i = 0; i + 1 < f.q(); ++i) pts.push_back(f.power_of_primitive(i));
  return pts;
}

inline LinearCode reed_solomon(const Field& f, std::size_t k) {
  detail::require(k <= f.q(), "Reed-Solomon dimension exceeds field size");
  const auto pts = evaluation_points(f);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < k; ++i) {
    Vec row(pts.size());
    for (std::size_t j = 0; j < pts.size(); ++j) row[j] = f.pow(pts[j], i);
    rows.push_back(std::move(row));
  }
  LinearCode c = LinearCode::from_generator(f, f.q(), rows);
  detail::ensure(c.k() == k, "Reed-Solomon generator rank");
  return c;
}

inline LinearCode reed_solomon(std::uint32_t q, std::size_t k) { return reed_solomon(Field::of_order(q), k); }

/// H1 H2^T = 0, equivalently dual(C2) is contained in C1.
inline bool is_css_pair(const LinearCode& c1, const LinearCode& c2) {
  detail::require(c1.field() == c2.field(), "field mismatch in CSS check");
  detail::require(c1.n() == c2.n(), "length mismatch in CSS check");
  bool commute = (c1.parity_check() * c2.parity_check().transpose()).is_zero();
  bool contained = c1.generator().contains(c2.generator().dual());
  detail::ensure(commute == contained, "commutativity and containment disagree");
  return commute;
}

/// Largest s with s * delta(x, C) <= |Hx| / rows(H) for every x, i.e. the
/// minimum over non-codewords of n |Hx| / (rows * d(x, C)). Nothing when C
/// is the whole space.
inline std::optional<Rational> ltc_soundness(const LinearCode& c, const Matrix& h,
                                             std::uint64_t cap = kDefaultEnumCap) {
  detail::require(h.field() == c.field() && h.cols() == c.n(), "parity-check matrix shape mismatch");
  detail::require(kernel(h) == c.generator(), "matrix is not a parity check for the code");
  if (c.is_full()) return std::nullopt;
  const std::uint64_t q = c.field().q();
  checked_power(q, c.n(), cap, "ltc_soundness");
  const Matrix& hc = c.parity_check();
  auto syndrome_index = [&](const Vec& x) {
    std::uint64_t idx = 0;
    for (Elem s : mat_vec(hc, x)) idx = idx * q + s;
    return idx;
  };
  const Subspace all = Subspace::full(c.field(), c.n());
  std::vector<std::size_t> leader(checked_power(q, c.r(), cap, "ltc_soundness"),
                                  std::numeric_limits<std::size_t>::max());
  for_each_vector(all, [&](const Vec& x) {
    auto& l = leader[syndrome_index(x)];
    l = std::min(l, weight(x));
  });
  std::optional<Rational> best;
  const auto n = static_cast<std::int64_t>(c.n()), rows = static_cast<std::int64_t>(h.rows());
  for_each_vector(all, [&](const Vec& x) {
    std::size_t d = leader[syndrome_index(x)];
    if (d == 0) return;
    Rational v(static_cast<std::int64_t>(weight(mat_vec(h, x))) * n, rows * static_cast<std::int64_t>(d));
    if (!best || v < *best) best = v;
  });
  return best;
}

// Text formats. A word over F_q is written as a digit string when q <= 10
// and as space-separated element indices otherwise.

inline std::string format_word(std::span<const Elem> v, std::uint32_t q) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (q > 10) {
      if (i) s += ' ';
      s += std::to_string(v[i]);
    } else {
      s += static_cast<char>('0' + v[i]);
    }
  }
  return s;
}

/// Reads `len` elements from a stream, accepting both the compact digit form
/// and whitespace-separated indices.
inline Vec read_word(std::istream& in, std::size_t len, std::uint32_t q) {
  Vec v;
  v.reserve(len);
  std::string tok;
  while (v.size() < len && in >> tok) {
    bool compact = q <= 10 && tok.size() > 1;
    if (compact) {
      for (char ch : tok) {
        detail::require(std::isdigit(static_cast<unsigned char>(ch)), "bad symbol '" + std::string(1, ch) + "'");
        v.push_back(static_cast<Elem>(ch - '0'));
      }
    } else {
      std::size_t pos = 0;
      unsigned long x = 0;
      try {
        x = std::stoul(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      detail::require(pos == tok.size(), "bad symbol '" + tok + "'");
      v.push_back(static_cast<Elem>(x));
    }
  }
  detail::require(v.size() == len, "word has " + std::to_string(v.size()) + " symbols, expected " +
                                       std::to_string(len));
  for (Elem x : v) detail::require(x < q, "symbol " + std::to_string(x) + " is not an element of GF(" +
                                              std::to_string(q) + ")");
  return v;
}

/// "q n k" followed by k generator rows.
inline void write_code(std::ostream& out, const LinearCode& c) {
  out << c.field().q() << ' ' << c.n() << ' ' << c.k() << '\n';
  for (std::size_t i = 0; i < c.k(); ++i) out << format_word(c.generator_matrix().row(i), c.field().q()) << '\n';
}

inline LinearCode read_code(std::istream& in) {
  std::uint64_t q = 0, n = 0, k = 0;
  detail::require(static_cast<bool>(in >> q >> n >> k), "code header must be 'q n k'");
  detail::require(k <= n, "code dimension exceeds length");
  Field f = Field::of_order(static_cast<std::uint32_t>(q));
  std::vector<Vec> rows;
  for (std::uint64_t i = 0; i < k; ++i) rows.push_back(read_word(in, n, f.q()));
  LinearCode c = LinearCode::from_generator(f, n, rows);
  detail::require(c.k() == k, "generator rows are linearly dependent");
  return c;
}

inline std::string to_text(const LinearCode& c) {
  std::ostringstream os;
  write_code(os, c);
  return os.str();
}

inline LinearCode code_from_text(const std::string& s) {
  std::istringstream is(s);
  return read_code(is);
}

}  // namespace prodexp
