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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"
#include "prodexp/tensor.hpp"

namespace prodexp {

/// x = a_1 + ... + a_m with a_i in C^(i).
struct Decomposition {
  std::vector<TensorWord> parts;
  /// sum_i ||a_i||_i
  Rational cost;
  /// sum_i n_i |a_i|_i, equal to cost * cells
  std::uint64_t raw_cost = 0;
};

/// Builds a decomposition from its parts, checking membership of each part
/// and that the parts sum to x.
inline Decomposition make_decomposition(const CodeCollection& coll, std::vector<TensorWord> parts,
                                        const TensorWord& x) {
  detail::require(parts.size() == coll.m(), "one part per axis is required");
  Decomposition d;
  TensorWord sum(coll.field(), coll.shape());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    detail::ensure(in_axis_code(parts[i], coll, i), "decomposition part " + std::to_string(i) + " leaves its axis code");
    d.raw_cost += coll.shape().size(i) * parts[i].line_weight(i);
    sum = sum + parts[i];
  }
  detail::ensure(sum == x, "decomposition parts do not sum to the word");
  d.cost = Rational(static_cast<std::int64_t>(d.raw_cost), static_cast<std::int64_t>(coll.shape().cells()));
  d.parts = std::move(parts);
  return d;
}

/// Linear-algebra data shared by every exact decomposition query on one
/// collection. A decomposition is stored as the concatenation a_1 | ... | a_m
/// (length m * cells). Let G be the stacked generators of all C^(i). Then
/// decompositions of x are the coefficient vectors y with y G = x, and they
/// form a coset of ker(G^T).
class DecompositionSystem {
 public:
  explicit DecompositionSystem(const CodeCollection& coll) : coll_(coll) {
    const GridShape& g = coll.shape();
    const std::size_t cells = g.cells(), m = coll.m();
    const Field& f = coll.field();
    for (std::size_t i = 0; i < m; ++i) starts_.push_back(g.line_starts(i));
    Matrix stacked(f, 0, cells);
    for (std::size_t i = 0; i < m; ++i) {
      const LinearCode& c = coll.code(i);
      for (std::size_t start : starts_[i])
        for (std::size_t r = 0; r < c.k(); ++r) {
          TensorWord w(f, g);
          w.set_line(i, start, c.generator_matrix().row(r));
          stacked.append_row(w.data());
          row_axis_.push_back(i);
        }
    }
    gen_ = stacked;
    gen_t_ = stacked.transpose();
    const std::size_t d = gen_.rows();

    RrefResult red = rref(gen_t_);
    lifted_ = Matrix(f, 0, cells + m * cells);
    for (std::size_t p : red.pivots) {
      Vec row(cells + m * cells, 0);
      std::copy(gen_.row(p).begin(), gen_.row(p).end(), row.begin());
      std::copy(gen_.row(p).begin(), gen_.row(p).end(), row.begin() + cells + row_axis_[p] * cells);
      lifted_.append_row(row);
    }

    Subspace ker = d == 0 ? Subspace(f, 0) : kernel(gen_t_);
    moves_ = Matrix(f, 0, m * cells);
    for (std::size_t j = 0; j < ker.dim(); ++j) moves_.append_row(concat_from_coefficients(ker.basis().row(j)));
    if (m == 2) {
      detail::ensure(ker.dim() == coll.code(0).k() * coll.code(1).k(),
                     "decomposition kernel dimension equals dim(C_1 (x) C_2)");
    }
  }

  const CodeCollection& collection() const { return coll_; }
  std::size_t cells() const { return coll_.shape().cells(); }
  std::size_t boxplus_dim() const { return lifted_.rows(); }
  std::size_t kernel_dim() const { return moves_.rows(); }
  /// Rows [c | decomposition of c] for a basis of the dual tensor code.
  const Matrix& lifted_basis() const { return lifted_; }
  /// Basis of the concatenations that sum to zero.
  const Matrix& kernel_moves() const { return moves_; }

  /// Some concatenation a_1 | ... | a_m summing to x, or nothing if x is not
  /// in the dual tensor code.
  std::optional<Vec> particular(std::span<const Elem> x) const {
    detail::require(x.size() == cells(), "word length does not match the grid");
    const std::size_t d = gen_.rows();
    Matrix aug(coll_.field(), cells(), d + 1);
    for (std::size_t r = 0; r < cells(); ++r) {
      for (std::size_t c = 0; c < d; ++c) aug(r, c) = gen_t_(r, c);
      aug(r, d) = x[r];
    }
    RrefResult red = rref(aug, d);
    for (std::size_t r = red.rank; r < cells(); ++r)
      if (red.reduced(r, d) != 0) return std::nullopt;
    Vec y(d, 0);
    for (std::size_t r = 0; r < red.rank; ++r) y[red.pivots[r]] = red.reduced(r, d);
    return concat_from_coefficients(y);
  }

  /// sum_i n_i |a_i|_i of a concatenation.
  std::uint64_t raw_cost(std::span<const Elem> concat) const {
    const GridShape& g = coll_.shape();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < coll_.m(); ++i) {
      const Elem* block = concat.data() + i * cells();
      const std::size_t st = g.stride(i), n = g.size(i);
      std::uint64_t lines = 0;
      for (std::size_t start : starts_[i])
        for (std::size_t s = 0; s < n; ++s)
          if (block[start + s * st] != 0) {
            ++lines;
            break;
          }
      total += n * lines;
    }
    return total;
  }

  Decomposition to_decomposition(std::span<const Elem> concat, const TensorWord& x) const {
    std::vector<TensorWord> parts;
    for (std::size_t i = 0; i < coll_.m(); ++i)
      parts.emplace_back(coll_.field(), coll_.shape(),
                         Vec(concat.begin() + i * cells(), concat.begin() + (i + 1) * cells()));
    return make_decomposition(coll_, std::move(parts), x);
  }

 private:
  Vec concat_from_coefficients(std::span<const Elem> y) const {
    Vec out(coll_.m() * cells(), 0);
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0)
        axpy(coll_.field(), std::span<Elem>(out.data() + row_axis_[j] * cells(), cells()), y[j], gen_.row(j));
    return out;
  }

  CodeCollection coll_;
  std::vector<std::vector<std::size_t>> starts_;
  std::vector<std::size_t> row_axis_;
  Matrix gen_, gen_t_, lifted_, moves_;
};

/// Minimum-cost decomposition of x; ties go to the lexicographically smallest
/// concatenation a_1 | ... | a_m.
inline Decomposition min_cost_decomposition(const TensorWord& x, const DecompositionSystem& sys,
                                            std::uint64_t cap = kDefaultEnumCap) {
  require_shape(x, sys.collection());
  std::optional<Vec> p = sys.particular(x.data());
  detail::require(p.has_value(), "word is not in the dual tensor code");
  checked_power(x.field().q(), sys.kernel_dim(), cap, "decomposition coset");
  Vec best;
  std::uint64_t best_cost = UINT64_MAX;
  for_each_in_coset(*p, sys.kernel_moves(), [&](const Vec& v) {
    std::uint64_t cst = sys.raw_cost(v);
    if (cst < best_cost || (cst == best_cost && v < best)) {
      best_cost = cst;
      best = v;
    }
  });
  return sys.to_decomposition(best, x);
}

inline Decomposition min_cost_decomposition(const TensorWord& x, const CodeCollection& coll,
                                            std::uint64_t cap = kDefaultEnumCap) {
  return min_cost_decomposition(x, DecompositionSystem(coll), cap);
}

/// Result of an expansion-factor computation.
struct ExpansionReport {
  Rational rho{1};
  /// Nonzero codeword attaining rho (absent when the dual tensor code is zero).
  std::optional<TensorWord> argmin;
  std::optional<Decomposition> decomposition;
  /// "exact", or "degenerate" for the closed form 1/n.
  std::string method = "exact";
  std::uint32_t q = 2;
  std::vector<std::size_t> lengths, dims;
};

inline ExpansionReport make_report_shell(const CodeCollection& coll) {
  ExpansionReport r;
  r.q = coll.field().q();
  for (const LinearCode& c : coll.codes()) {
    r.lengths.push_back(c.n());
    r.dims.push_back(c.k());
  }
  return r;
}

/// rho(C) = min over nonzero c in the dual tensor code of |c| / min cost(c).
/// A collection containing a full code with all lengths equal to n has
/// rho = 1/n: the full axis gives every word cost at most n|c|, and a single
/// cell needs at least one line of cost n.
inline ExpansionReport expansion_factor(const CodeCollection& coll, std::uint64_t cap = kDefaultEnumCap) {
  ExpansionReport rep = make_report_shell(coll);
  const GridShape& g = coll.shape();
  const bool equal_lengths = std::all_of(g.sizes().begin(), g.sizes().end(), [&](std::size_t n) { return n == g.size(0); });
  if (coll.degenerate() && equal_lengths) {
    std::size_t full_axis = 0;
    while (!coll.code(full_axis).is_full()) ++full_axis;
    TensorWord cell(coll.field(), g);
    cell[0] = 1;
    std::vector<TensorWord> parts(coll.m(), TensorWord(coll.field(), g));
    parts[full_axis] = cell;
    rep.rho = Rational(1, static_cast<std::int64_t>(g.size(0)));
    rep.decomposition = make_decomposition(coll, std::move(parts), cell);
    rep.argmin = cell;
    rep.method = "degenerate";
    return rep;
  }

  DecompositionSystem sys(coll);
  const std::size_t cells = g.cells();
  checked_power(coll.field().q(), sys.boxplus_dim() + sys.kernel_dim(), cap, "expansion factor enumeration");
  if (sys.boxplus_dim() == 0) return rep;

  std::uint64_t best_w = 0, best_u = 0;
  Vec best_c;
  for_each_combination(sys.lifted_basis(), [&](const Vec& row) {
    std::span<const Elem> c(row.data(), cells);
    const std::uint64_t w = weight(c);
    if (w == 0) return;
    std::uint64_t u = UINT64_MAX;
    for_each_in_coset(Vec(row.begin() + cells, row.end()), sys.kernel_moves(),
                      [&](const Vec& v) { u = std::min(u, sys.raw_cost(v)); });
    // Compare w/u with best_w/best_u.
    const bool better = best_c.empty() || w * best_u < best_w * u ||
                        (w * best_u == best_w * u && std::lexicographical_compare(c.begin(), c.end(), best_c.begin(), best_c.end()));
    if (better) {
      best_w = w;
      best_u = u;
      best_c.assign(c.begin(), c.end());
    }
  });
  TensorWord arg(coll.field(), g, best_c);
  rep.decomposition = min_cost_decomposition(arg, sys, cap);
  detail::ensure(rep.decomposition->raw_cost == best_u, "argmin decomposition cost is reproducible");
  rep.rho = Rational(static_cast<std::int64_t>(best_w), static_cast<std::int64_t>(best_u));
  rep.argmin = std::move(arg);
  return rep;
}

/// Outcome of the greedy line-replacement heuristic.
struct GreedyResult {
  bool success = false;
  std::size_t steps = 0;
  /// Valid when success is true.
  std::optional<Decomposition> decomposition;
  /// What is left of x when the heuristic stalls.
  TensorWord residual;
};

/// Greedy heuristic for two codes: repeatedly subtract from the column (in
/// C_1) or row (in C_2) the nearest codeword that lowers |x| the most. Ties
/// prefer columns, then the lowest index. The cost is an upper bound on the
/// minimum cost.
inline GreedyResult greedy_decomposition(const TensorWord& x, const LinearCode& c1, const LinearCode& c2,
                                         std::uint64_t cap = kDefaultEnumCap) {
  CodeCollection coll(c1, c2);
  require_shape(x, coll);
  detail::require(boxplus_membership(x, c1, c2), "word is not in the dual tensor code");
  const GridShape& g = coll.shape();
  const std::size_t n1 = c1.n(), n2 = c2.n();
  TensorWord rest = x, a1(x.field(), g), a2(x.field(), g);
  GreedyResult out;
  const std::vector<std::size_t> col_starts = g.line_starts(0), row_starts = g.line_starts(1);
  while (!rest.is_zero() && out.steps < n1 + n2) {
    std::size_t best_gain = 0, best_axis = 0, best_start = 0;
    Vec best_word;
    for (std::size_t axis = 0; axis < 2; ++axis) {
      const LinearCode& c = axis == 0 ? c1 : c2;
      for (std::size_t start : axis == 0 ? col_starts : row_starts) {
        Vec line = rest.line(axis, start);
        Nearest near = nearest_codeword(line, c.generator(), cap);
        std::size_t gain = weight(line) - near.distance;
        if (gain > best_gain) {
          best_gain = gain;
          best_axis = axis;
          best_start = start;
          best_word = near.codeword;
        }
      }
    }
    if (best_gain == 0) break;
    const Field& f = x.field();
    Vec line = rest.line(best_axis, best_start);
    TensorWord& acc = best_axis == 0 ? a1 : a2;
    Vec acc_line = acc.line(best_axis, best_start);
    for (std::size_t s = 0; s < line.size(); ++s) {
      line[s] = f.sub(line[s], best_word[s]);
      acc_line[s] = f.add(acc_line[s], best_word[s]);
    }
    rest.set_line(best_axis, best_start, line);
    acc.set_line(best_axis, best_start, acc_line);
    ++out.steps;
  }
  out.residual = rest;
  out.success = rest.is_zero();
  if (out.success) out.decomposition = make_decomposition(coll, {a1, a2}, x);
  return out;
}

/// Minimum number of rows and columns covering the support of a matrix
/// (maximum bipartite matching). Every decomposition of x into columns from
/// C_1 and rows from C_2 uses at least this many lines.
inline std::size_t line_cover_number(const TensorWord& x) {
  detail::require(x.shape().m() == 2, "line cover is defined on matrices");
  const std::size_t rows = x.shape().size(0), cols = x.shape().size(1);
  std::vector<std::size_t> match_col(cols, SIZE_MAX);
  std::size_t matched = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<char> seen(cols, 0);
    std::function<bool(std::size_t)> augment = [&](std::size_t u) -> bool {
      for (std::size_t c = 0; c < cols; ++c) {
        if (x.at(u, c) == 0 || seen[c]) continue;
        seen[c] = 1;
        if (match_col[c] == SIZE_MAX || augment(match_col[c])) {
          match_col[c] = u;
          return true;
        }
      }
      return false;
    };
    if (augment(r)) ++matched;
  }
  return matched;
}

/// Certified upper bound on rho from one codeword c of C_1 [+] C_2:
/// |c| / (min(n_1, n_2) * line_cover_number(c)).
inline Rational line_cover_bound(const TensorWord& c) {
  const std::size_t tau = line_cover_number(c);
  detail::require(tau > 0, "the zero word gives no bound");
  const std::size_t nmin = std::min(c.shape().size(0), c.shape().size(1));
  return Rational(static_cast<std::int64_t>(c.weight()), static_cast<std::int64_t>(nmin * tau));
}

}  // namespace prodexp
