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
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/expansion.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"
#include "prodexp/tensor.hpp"

namespace prodexp {

namespace detail {

/// Number of nonzero axis-`axis` lines of a flattened word.
inline std::size_t count_lines(std::span<const Elem> w, const GridShape& g, std::size_t axis,
                               const std::vector<std::size_t>& starts) {
  std::size_t lines = 0;
  const std::size_t st = g.stride(axis), n = g.size(axis);
  for (std::size_t start : starts)
    for (std::size_t s = 0; s < n; ++s)
      if (w[start + s * st] != 0) {
        ++lines;
        break;
      }
  return lines;
}

inline std::vector<Vec> all_vectors(const Subspace& s, std::uint64_t cap) {
  s.size(cap);
  std::vector<Vec> out;
  for_each_vector(s, [&](const Vec& v) { out.push_back(v); });
  return out;
}

inline Vec sub_vec(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

}  // namespace detail

/// The largest rho with rho (||c_1 - c||_1 + ||c_2 - c||_2) <= ||c_1 - c_2||
/// for all c_1 in C^(1), c_2 in C^(2) and a suitable c in C_1 (x) C_2. The
/// quantity depends only on d = c_1 - c_2, so this enumerates d over the dual
/// tensor code, picks one pair (c_1, c_2) with that difference, and minimizes
/// over c.
inline Rational agreement_test_constant(const LinearCode& c1, const LinearCode& c2,
                                        std::uint64_t cap = kDefaultEnumCap) {
  CodeCollection coll(c1, c2);
  const GridShape& g = coll.shape();
  const Field& f = coll.field();
  const std::size_t n1 = c1.n(), n2 = c2.n(), cells = g.cells();
  DecompositionSystem sys(coll);
  Subspace box = boxplus_basis(coll);
  Subspace prod = tensor_code_basis(coll);
  checked_power(f.q(), box.dim() + prod.dim(), cap, "agreement constant enumeration");
  const std::vector<Vec> products = detail::all_vectors(prod, cap);
  const auto cols = g.line_starts(0), rows = g.line_starts(1);
  std::optional<Rational> best;
  for_each_vector(box, [&](const Vec& d) {
    const std::size_t w = weight(d);
    if (w == 0) return;
    Vec split = *sys.particular(d);
    Vec word1(split.begin(), split.begin() + cells);
    Vec word2 = detail::sub_vec(f, Vec(cells, 0), std::span<const Elem>(split.data() + cells, cells));
    std::uint64_t lowest = UINT64_MAX;
    for (const Vec& c : products) {
      std::uint64_t cost = n1 * detail::count_lines(detail::sub_vec(f, word1, c), g, 0, cols) +
                           n2 * detail::count_lines(detail::sub_vec(f, word2, c), g, 1, rows);
      lowest = std::min(lowest, cost);
    }
    Rational r(static_cast<std::int64_t>(w), static_cast<std::int64_t>(lowest));
    if (!best || r < *best) best = r;
  });
  return best.value_or(Rational(1));
}

/// The same constant by enumerating every triple (c_1, c_2, c) directly.
inline Rational agreement_test_constant_direct(const LinearCode& c1, const LinearCode& c2,
                                               std::uint64_t cap = kDefaultEnumCap) {
  CodeCollection coll(c1, c2);
  const GridShape& g = coll.shape();
  const Field& f = coll.field();
  const std::size_t n1 = c1.n(), n2 = c2.n();
  Subspace s1 = axis_code_basis(coll, 0), s2 = axis_code_basis(coll, 1), prod = tensor_code_basis(coll);
  checked_power(f.q(), s1.dim() + s2.dim() + prod.dim(), cap, "direct agreement enumeration");
  const std::vector<Vec> w1 = detail::all_vectors(s1, cap), w2 = detail::all_vectors(s2, cap),
                         products = detail::all_vectors(prod, cap);
  const auto cols = g.line_starts(0), rows = g.line_starts(1);
  std::optional<Rational> best;
  for (const Vec& a : w1) {
    std::vector<std::size_t> cost1(products.size());
    for (std::size_t t = 0; t < products.size(); ++t)
      cost1[t] = n1 * detail::count_lines(detail::sub_vec(f, a, products[t]), g, 0, cols);
    for (const Vec& b : w2) {
      const std::size_t w = hamming_distance(a, b);
      if (w == 0) continue;
      std::uint64_t lowest = UINT64_MAX;
      for (std::size_t t = 0; t < products.size(); ++t)
        lowest = std::min<std::uint64_t>(lowest, cost1[t] + n2 * detail::count_lines(detail::sub_vec(f, b, products[t]), g, 1, rows));
      Rational r(static_cast<std::int64_t>(w), static_cast<std::int64_t>(lowest));
      if (!best || r < *best) best = r;
    }
  }
  return best.value_or(Rational(1));
}

struct RobustnessResult {
  /// Absent when every word is a product codeword.
  std::optional<Rational> value;
  std::optional<TensorWord> argmin;
};

/// min over x outside C_1 (x) C_2 of
///   (delta(x, C^(1)) + delta(x, C^(2))) / (2 delta(x, C_1 (x) C_2)),
/// exhaustively over all q^{n_1 n_2} words. Ties keep the first word in
/// base-q order.
inline RobustnessResult robustness_constant(const LinearCode& c1, const LinearCode& c2,
                                            std::uint64_t cap = kDefaultEnumCap) {
  CodeCollection coll(c1, c2);
  const GridShape& g = coll.shape();
  const std::uint32_t q = coll.field().q();
  const std::size_t n1 = c1.n(), n2 = c2.n(), cells = g.cells();
  const std::uint64_t total = checked_power(q, cells, cap, "robustness enumeration");
  const std::vector<std::uint8_t> d1 = distance_table(c1, cap), d2 = distance_table(c2, cap);
  const std::vector<std::uint8_t> dt = distance_table(LinearCode(tensor_code_basis(coll)), cap);
  RobustnessResult out;
  std::uint64_t best_num = 0, best_den = 0;
  Vec digits(cells, 0);
  for (std::uint64_t id = 0; id < total; ++id) {
    if (id > 0) {
      std::size_t pos = cells;
      while (pos-- > 0) {
        if (++digits[pos] < q) break;
        digits[pos] = 0;
      }
    }
    const std::uint64_t dist_t = dt[id];
    if (dist_t == 0) continue;
    std::uint64_t sum = 0;
    for (std::size_t c = 0; c < n2; ++c) {
      std::uint64_t col = 0;
      for (std::size_t r = 0; r < n1; ++r) col = col * q + digits[r * n2 + c];
      sum += d1[col];
    }
    for (std::size_t r = 0; r < n1; ++r) {
      std::uint64_t row = 0;
      for (std::size_t c = 0; c < n2; ++c) row = row * q + digits[r * n2 + c];
      sum += d2[row];
    }
    const std::uint64_t num = sum, den = 2 * dist_t;
    if (!out.value || num * best_den < best_num * den) {
      best_num = num;
      best_den = den;
      out.value = Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
      out.argmin = TensorWord(coll.field(), g, digits);
    }
  }
  return out;
}

/// rho' / (2 (rho' + 1)): robustness implied by agreement testability.
inline Rational dinur_conversion(const Rational& rho_prime) {
  detail::require(rho_prime >= 0, "conversion needs a nonnegative constant");
  return rho_prime / (Rational(2) * (rho_prime + 1));
}

/// Each row r satisfies |x(r,.)| <= d(x(r,.), C_2) + delta and each column c
/// satisfies |x(.,c)| <= d(x(.,c), C_1) + delta.
inline bool is_delta_minimal(const TensorWord& x, const Rational& delta, const LinearCode& c1,
                             const LinearCode& c2, std::uint64_t cap = kDefaultEnumCap) {
  CodeCollection coll(c1, c2);
  require_shape(x, coll);
  for (std::size_t axis = 0; axis < 2; ++axis) {
    const LinearCode& c = axis == 0 ? c1 : c2;
    for (std::size_t start : coll.shape().line_starts(axis)) {
      Vec line = x.line(axis, start);
      const std::size_t d = nearest_codeword(line, c.generator(), cap).distance;
      if (Rational(static_cast<std::int64_t>(weight(line))) > Rational(static_cast<std::int64_t>(d)) + delta) return false;
    }
  }
  return true;
}

/// Minimum of |x(A, B)| over row sets A and column sets B that each omit at
/// most t indices. Every row subset of size t is tried and, for each, the t
/// heaviest remaining columns are dropped; this is exact because once the
/// rows are fixed, dropping the heaviest columns is optimal.
inline std::size_t min_rectangle_weight(const TensorWord& x, std::size_t t) {
  detail::require(x.shape().m() == 2, "rectangles are defined on matrices");
  const std::size_t rows = x.shape().size(0), cols = x.shape().size(1);
  const std::size_t tr = std::min(t, rows), tc = std::min(t, cols);
  std::vector<char> drop(rows, 0);
  std::fill(drop.end() - static_cast<std::ptrdiff_t>(tr), drop.end(), 1);
  std::size_t best = SIZE_MAX;
  do {
    std::vector<std::size_t> col_w(cols, 0);
    for (std::size_t r = 0; r < rows; ++r)
      if (!drop[r])
        for (std::size_t c = 0; c < cols; ++c) col_w[c] += x.at(r, c) != 0;
    std::sort(col_w.begin(), col_w.end());
    std::size_t w = 0;
    for (std::size_t c = 0; c + tc < cols; ++c) w += col_w[c];
    best = std::min(best, w);
  } while (std::next_permutation(drop.begin(), drop.end()));
  return best;
}

struct SmbResult {
  bool holds = true;
  std::optional<TensorWord> counterexample;
  std::size_t minimal_codewords = 0;
};

/// Checks that every nonzero (beta n)-minimal codeword x of C_1 [+] C_2
/// keeps |x(A, B)| >= s whenever |A|, |B| >= n - m.
inline SmbResult smb_expansion_check(const LinearCode& c1, const LinearCode& c2, const Rational& s,
                                     const Rational& m, const Rational& beta, std::uint64_t cap = kDefaultEnumCap) {
  detail::require(c1.n() == c2.n(), "(s, m, beta) expansion is defined for equal lengths");
  detail::require(m >= 0 && beta >= 0, "m and beta must be nonnegative");
  CodeCollection coll(c1, c2);
  const std::size_t n = c1.n();
  const std::uint32_t q = coll.field().q();
  Subspace box = boxplus_basis(coll);
  box.size(cap);
  const std::vector<std::uint8_t> d1 = distance_table(c1, cap), d2 = distance_table(c2, cap);
  const Rational delta = beta * static_cast<std::int64_t>(n);
  // |A| >= n - m allows dropping floor(m) rows.
  const std::size_t t = static_cast<std::size_t>(
      std::min<std::int64_t>(m.numerator() / m.denominator(), static_cast<std::int64_t>(n)));
  SmbResult out;
  for_each_vector(box, [&](const Vec& v) {
    if (!out.holds || weight(v) == 0) return;
    bool minimal = true;
    for (std::size_t i = 0; i < n && minimal; ++i) {
      std::uint64_t row = 0, col = 0;
      std::size_t rw = 0, cw = 0;
      for (std::size_t j = 0; j < n; ++j) {
        row = row * q + v[i * n + j];
        col = col * q + v[j * n + i];
        rw += v[i * n + j] != 0;
        cw += v[j * n + i] != 0;
      }
      if (Rational(static_cast<std::int64_t>(rw)) > Rational(d2[row]) + delta) minimal = false;
      if (Rational(static_cast<std::int64_t>(cw)) > Rational(d1[col]) + delta) minimal = false;
    }
    if (!minimal) return;
    ++out.minimal_codewords;
    TensorWord x(coll.field(), coll.shape(), v);
    if (Rational(static_cast<std::int64_t>(min_rectangle_weight(x, t))) < s) {
      out.holds = false;
      out.counterexample = x;
    }
  });
  return out;
}

struct UpperBoundWitness {
  TensorWord y;
  /// An upper bound on rho(C_1, C_2) read off y: |y| / min cost(y) when the
  /// decomposition coset fits the cap, otherwise |y| / (n * line cover of y).
  Rational certified;
  /// "min-cost" or "line-cover".
  std::string certified_by;
  /// eps_1 eps_2 + 1/n
  Rational bound;
};

/// Builds the diagonal-based codeword that shows rho <= eps_1 eps_2 + 1/n:
/// a diagonal on A_1 x A_2' is encoded column-wise by C_1, then the part on
/// the rows outside A_1 and the columns of A_2 is cancelled by rows of C_2.
inline UpperBoundWitness upper_bound_witness(const LinearCode& code1, const LinearCode& code2,
                                             std::uint64_t cap = kDefaultEnumCap) {
  detail::require(code1.n() == code2.n(), "the witness needs codes of equal length");
  detail::require(code1.k() >= 1 && code2.k() >= 1, "the witness needs nonzero codes");
  const bool swap = code1.epsilon() > code2.epsilon();
  const LinearCode& c1 = swap ? code2 : code1;
  const LinearCode& c2 = swap ? code1 : code2;
  const std::size_t n = c1.n();
  const Field& f = c1.field();
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  const std::vector<std::size_t> a1 = *information_set(c1, all), a2 = *information_set(c2, all);
  std::vector<std::size_t> a2p = a2;
  for (std::size_t i = 0; i < n && a2p.size() < a1.size(); ++i)
    if (std::find(a2.begin(), a2.end(), i) == a2.end()) a2p.push_back(i);
  std::sort(a2p.begin(), a2p.end());

  Matrix x(f, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec vals(a1.size(), 0);
    for (std::size_t t = 0; t < a1.size(); ++t)
      if (a2p[t] == j) vals[t] = 1;
    Vec col = encode_on_positions(c1, a1, vals);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = col[i];
  }
  std::vector<char> in_a1(n, 0);
  for (std::size_t i : a1) in_a1[i] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (in_a1[i]) continue;
    Vec vals(a2.size());
    for (std::size_t t = 0; t < a2.size(); ++t) vals[t] = x(i, a2[t]);
    Vec row = encode_on_positions(c2, a2, vals);
    for (std::size_t j = 0; j < n; ++j) x(i, j) = f.sub(x(i, j), row[j]);
  }
  Matrix ym = swap ? x.transpose() : x;
  TensorWord y = TensorWord::from_matrix(ym);
  CodeCollection coll(code1, code2);
  detail::ensure(boxplus_membership(y, code1, code2), "witness lies in the dual tensor code");
  const Rational eps = code1.epsilon() * code2.epsilon();
  const Rational nn = static_cast<std::int64_t>(n);
  detail::ensure(Rational(static_cast<std::int64_t>(y.weight())) <= eps * nn * nn + nn, "witness weight bound");
  UpperBoundWitness w{y, Rational(1), "min-cost", eps + Rational(1, static_cast<std::int64_t>(n))};
  bool exact = true;
  try {
    checked_power(f.q(), c1.k() * c2.k(), cap, "witness decomposition");
  } catch (const CapExceeded&) {
    exact = false;
  }
  if (exact) {
    Decomposition d = min_cost_decomposition(y, coll, cap);
    w.certified = Rational(static_cast<std::int64_t>(y.weight()), static_cast<std::int64_t>(d.raw_cost));
    detail::ensure(w.certified <= w.bound, "witness ratio exceeds eps_1 eps_2 + 1/n");
  } else {
    w.certified = line_cover_bound(y);
    w.certified_by = "line-cover";
  }
  return w;
}

}  // namespace prodexp
