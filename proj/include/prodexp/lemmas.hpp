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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/entropy.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"
#include "prodexp/tensor.hpp"

namespace prodexp {

using IndexSet = std::vector<std::size_t>;

namespace detail {

inline IndexSet complement(const IndexSet& a, std::size_t n) {
  std::vector<char> in(n, 0);
  for (std::size_t i : a) {
    require(i < n, "index out of range");
    in[i] = 1;
  }
  IndexSet out;
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(i);
  return out;
}

inline IndexSet normalized(IndexSet a) {
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline void require_pair_shape(const TensorWord& x, const LinearCode& c1, const LinearCode& c2) {
  require(x.shape().m() == 2 && x.shape().size(0) == c1.n() && x.shape().size(1) == c2.n(),
          "word shape does not match the codes");
}

inline Matrix inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RrefResult red = rref(aug, n);
  ensure(red.rank == n, "matrix is invertible");
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.reduced(r, n + c);
  return inv;
}

}  // namespace detail

struct RectangleSplit {
  /// Columns from C_1, supported on the columns outside A_2.
  TensorWord columns;
  /// Rows from C_2, supported on the rows outside A_1.
  TensorWord rows;
};

/// For x in C_1 [+] C_2 vanishing on A_1 x A_2 with n_i - |A_i| < d(C_i),
/// splits x into at most n_2 - |A_2| columns from C_1 and at most
/// n_1 - |A_1| rows from C_2. A_1 indexes rows and A_2 indexes columns.
inline RectangleSplit zero_rectangle_decompose(const TensorWord& x, IndexSet a1, IndexSet a2, const LinearCode& c1,
                                               const LinearCode& c2) {
  detail::require_pair_shape(x, c1, c2);
  a1 = detail::normalized(std::move(a1));
  a2 = detail::normalized(std::move(a2));
  const std::size_t n1 = c1.n(), n2 = c2.n();
  detail::require(boxplus_membership(x, c1, c2), "word is not in the dual tensor code");
  for (std::size_t r : a1)
    for (std::size_t c : a2) detail::require(x.at(r, c) == 0, "word does not vanish on A_1 x A_2");
  detail::require(n1 - a1.size() < min_distance(c1), "n - |A_1| must be below d(C_1)");
  detail::require(n2 - a2.size() < min_distance(c2), "n - |A_2| must be below d(C_2)");
  const IndexSet i1 = *information_set(c1, a1), i2 = *information_set(c2, a2);
  const IndexSet out1 = detail::complement(a1, n1), out2 = detail::complement(a2, n2);

  RectangleSplit s{TensorWord(x.field(), x.shape()), TensorWord(x.field(), x.shape())};
  for (std::size_t c : out2) {
    Vec vals;
    for (std::size_t r : i1) vals.push_back(x.at(r, c));
    Vec col = encode_on_positions(c1, i1, vals);
    for (std::size_t r = 0; r < n1; ++r) s.columns.at(r, c) = col[r];
  }
  for (std::size_t r : out1) {
    Vec vals;
    for (std::size_t c : i2) vals.push_back(x.at(r, c));
    Vec row = encode_on_positions(c2, i2, vals);
    for (std::size_t c = 0; c < n2; ++c) s.rows.at(r, c) = row[c];
  }
  detail::ensure(s.columns + s.rows == x, "zero-rectangle split reproduces the word");
  detail::ensure(s.columns.line_weight(0) <= out2.size(), "column part uses at most n - |A_2| columns");
  detail::ensure(s.rows.line_weight(1) <= out1.size(), "row part uses at most n - |A_1| rows");
  return s;
}

/// Rows of weight at most alpha_2 n / 2 and columns of weight at most
/// alpha_1 n / 2. Returned when both sets are nonempty and x vanishes on
/// their product. Requires a square word.
inline std::optional<std::pair<IndexSet, IndexSet>> find_zero_rectangle(const TensorWord& x, const LinearCode& c1,
                                                                        const LinearCode& c2, const Rational& alpha1,
                                                                        const Rational& alpha2) {
  detail::require_pair_shape(x, c1, c2);
  detail::require(c1.n() == c2.n(), "zero rectangles are searched in square words");
  detail::require(alpha1 > 0 && alpha2 > 0, "sparsity parameters must be positive");
  const std::size_t n = c1.n();
  const Rational nn = static_cast<std::int64_t>(n);
  IndexSet a, b;
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t w = 0;
    for (std::size_t c = 0; c < n; ++c) w += x.at(r, c) != 0;
    if (Rational(w) <= alpha2 * nn / 2) a.push_back(r);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t w = 0;
    for (std::size_t r = 0; r < n; ++r) w += x.at(r, c) != 0;
    if (Rational(w) <= alpha1 * nn / 2) b.push_back(c);
  }
  const Rational weight_x = static_cast<std::int64_t>(x.weight());
  detail::ensure(Rational(static_cast<std::int64_t>(a.size())) >= nn - weight_x / (alpha2 * nn / 2),
                 "light-row count bound");
  detail::ensure(Rational(static_cast<std::int64_t>(b.size())) >= nn - weight_x / (alpha1 * nn / 2),
                 "light-column count bound");
  if (a.empty() || b.empty()) return std::nullopt;
  for (std::size_t r : a)
    for (std::size_t c : b)
      if (x.at(r, c) != 0) return std::nullopt;
  return std::make_pair(a, b);
}

namespace detail {

/// Section of the restriction F^n -> F^A: an |A| x n matrix S whose rows are
/// images of the standard basis of F^A, with S restricted to A equal to the
/// identity and S mapping C|_A into C. C|_A gets the basis from its RREF,
/// completed by unit vectors at the non-pivot positions.
inline Matrix restriction_section(const LinearCode& c, const IndexSet& a) {
  const Field& f = c.field();
  const std::size_t n = c.n(), s = a.size();
  if (s == 0) return Matrix(f, 0, n);
  const Matrix& g = c.generator_matrix();
  Matrix aug(f, g.rows(), s + n);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t t = 0; t < s; ++t) aug(r, t) = g(r, a[t]);
    for (std::size_t j = 0; j < n; ++j) aug(r, s + j) = g(r, j);
  }
  RrefResult red = rref(aug, s);
  Matrix basis(f, 0, s), lifts(f, 0, n);
  std::vector<char> pivot(s, 0);
  for (std::size_t r = 0; r < red.rank; ++r) {
    pivot[red.pivots[r]] = 1;
    Vec e(s), lift(n);
    for (std::size_t t = 0; t < s; ++t) e[t] = red.reduced(r, t);
    for (std::size_t j = 0; j < n; ++j) lift[j] = red.reduced(r, s + j);
    basis.append_row(e);
    lifts.append_row(lift);
  }
  for (std::size_t t = 0; t < s; ++t) {
    if (pivot[t]) continue;
    Vec e(s, 0), lift(n, 0);
    e[t] = 1;
    lift[a[t]] = 1;
    basis.append_row(e);
    lifts.append_row(lift);
  }
  return inverse(basis) * lifts;
}

}  // namespace detail

/// Extends x(A_1, A_2) to a codeword x' of C_1 [+] C_2 with the same entries
/// on A_1 x A_2 and the same rank, via x' = S_1^T x(A_1, A_2) S_2.
inline TensorWord extend_codeword_part(const TensorWord& x, IndexSet a1, IndexSet a2, const LinearCode& c1,
                                       const LinearCode& c2) {
  detail::require_pair_shape(x, c1, c2);
  detail::require(boxplus_membership(x, c1, c2), "word is not in the dual tensor code");
  a1 = detail::normalized(std::move(a1));
  a2 = detail::normalized(std::move(a2));
  const Matrix xm = x.to_matrix();
  const Matrix part = xm.select_rows(a1).select_columns(a2);
  const Matrix s1 = detail::restriction_section(c1, a1), s2 = detail::restriction_section(c2, a2);
  const Matrix ext = s1.transpose() * part * s2;
  TensorWord out = TensorWord::from_matrix(ext);
  detail::ensure(ext.select_rows(a1).select_columns(a2) == part, "extension agrees on A_1 x A_2");
  detail::ensure(rank(ext) == rank(part), "extension keeps the rank of the block");
  detail::ensure(boxplus_membership(out, c1, c2), "extension stays in the dual tensor code");
  return out;
}

struct RankBound {
  std::size_t rank = 0;
  /// dim(X cap C_1), X the column space of x.
  std::size_t column_meet = 0;
  /// dim(Y cap C_2), Y the row space of x.
  std::size_t row_meet = 0;
  bool holds = true;
};

/// rk x <= dim(X cap C_1) + dim(Y cap C_2) for x in C_1 [+] C_2.
inline RankBound rank_bound_check(const TensorWord& x, const LinearCode& c1, const LinearCode& c2) {
  detail::require_pair_shape(x, c1, c2);
  detail::require(boxplus_membership(x, c1, c2), "word is not in the dual tensor code");
  const Matrix xm = x.to_matrix();
  RankBound b;
  b.rank = rank(xm);
  b.column_meet = subspace_intersection(image(xm), c1.generator()).dim();
  b.row_meet = subspace_intersection(row_space(xm), c2.generator()).dim();
  b.holds = b.rank <= b.column_meet + b.row_meet;
  return b;
}

/// (X (x) Y) cap (C_1 [+] C_2) == (X cap C_1) (x) Y + X (x) (Y cap C_2).
inline bool intersection_identity_check(const Subspace& x, const Subspace& y, const LinearCode& c1,
                                        const LinearCode& c2) {
  detail::require(x.ambient() == c1.n() && y.ambient() == c2.n(), "subspace and code lengths differ");
  const Subspace box = boxplus_basis(CodeCollection(c1, c2));
  const Subspace lhs = subspace_intersection(tensor(x, y), box);
  const Subspace rhs =
      subspace_sum(tensor(subspace_intersection(x, c1.generator()), y), tensor(x, subspace_intersection(y, c2.generator())));
  return lhs == rhs;
}

/// A sparse subspace V with dim(U cap V) >= dim V / 2.
struct StarWitness {
  std::size_t dim = 0;
  Matrix basis;
  std::size_t intersection_dim = 0;
};

struct StarResult {
  bool holds = true;
  std::optional<StarWitness> witness;
  std::size_t subspaces_checked = 0;
  /// Largest weight allowed for a spanning vector.
  std::size_t threshold = 0;
};

/// Checks that every subspace spanned by at most r vectors of weight at most
/// `threshold` meets U in less than half its dimension. Subspaces are visited
/// by dimension, each dimension in lexicographic order of RREF bases; the
/// first violation is returned. At most `cap` subspaces are examined.
inline StarResult has_property_star_threshold(const Subspace& u, std::size_t r, std::size_t threshold,
                                              std::uint64_t cap = std::uint64_t{1} << 20) {
  const Field& f = u.field();
  const std::size_t n = u.ambient();
  StarResult out;
  out.threshold = threshold;
  if (threshold == 0 || r == 0) return out;
  // Sparse vectors up to scaling: leading nonzero entry equal to one.
  std::vector<Vec> sparse;
  for_each_vector(Subspace::full(f, n), [&](const Vec& v) {
    const std::size_t w = weight(v);
    if (w == 0 || w > threshold) return;
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (*lead == 1) sparse.push_back(v);
  });
  std::set<Vec> level;
  for (const Vec& v : sparse) level.insert(Subspace::span_of(f, n, {v}).basis().data());
  for (std::size_t m = 1; m <= std::min(r, n) && !level.empty(); ++m) {
    for (const Vec& data : level) {
      if (++out.subspaces_checked > cap) throw CapExceeded("property (*) enumeration exceeds cap " + std::to_string(cap));
      Subspace v = Subspace::span_of(Matrix(f, m, n, data));
      const std::size_t meet = subspace_intersection(u, v).dim();
      if (2 * meet >= m) {
        out.holds = false;
        out.witness = StarWitness{m, v.basis(), meet};
        return out;
      }
    }
    if (m == std::min(r, n)) break;
    std::set<Vec> next;
    for (const Vec& data : level) {
      Matrix base(f, m, n, data);
      Subspace cur = Subspace::span_of(base);
      for (const Vec& s : sparse) {
        if (cur.contains(s)) continue;
        Matrix grown = base;
        grown.append_row(s);
        next.insert(Subspace::span_of(grown).basis().data());
        if (next.size() > cap) throw CapExceeded("property (*) enumeration exceeds cap " + std::to_string(cap));
      }
    }
    level = std::move(next);
  }
  return out;
}

/// Sparsity threshold floor(alpha n) with alpha = H_q^{-1}(r / (8n)).
inline std::size_t property_star_threshold(std::uint32_t q, std::size_t n, std::size_t r) {
  detail::require(n >= 1 && r <= n, "property (*) needs 0 <= r <= n");
  const double alpha = entropy_q_inv(q, static_cast<double>(r) / (8.0 * static_cast<double>(n)));
  return static_cast<std::size_t>(std::floor(alpha * static_cast<double>(n)));
}

inline StarResult has_property_star(const Subspace& u, std::size_t r, std::uint64_t cap = std::uint64_t{1} << 20) {
  return has_property_star_threshold(u, r, property_star_threshold(u.field().q(), u.ambient(), r), cap);
}

}  // namespace prodexp
