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

// Brute-force reference computations used as test oracles. They rely only on
// field arithmetic and generator matrices, never on the library's
// decomposition, enumeration or distance routines.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/random.hpp"
#include "prodexp/rational.hpp"

namespace oracle {

using prodexp::Elem;
using prodexp::Field;
using prodexp::LinearCode;
using prodexp::Rational;
using prodexp::Vec;

inline std::size_t wt(const Vec& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem e) { return e != 0; }));
}

// Every vector of F_q^n, in base-q counting order with position 0 fastest.
inline std::vector<Vec> all_words(const Field& f, std::size_t n) {
  std::vector<Vec> out;
  Vec v(n, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < n && v[i] == f.q() - 1) v[i++] = 0;
    if (i == n) break;
    ++v[i];
  }
  return out;
}

// All codewords as explicit combinations of the generator rows.
inline std::vector<Vec> codewords(const LinearCode& c) {
  const Field& f = c.field();
  const auto& g = c.generator_matrix();
  std::vector<Vec> out;
  for (const Vec& coeff : all_words(f, c.k())) {
    Vec w(c.n(), 0);
    for (std::size_t r = 0; r < c.k(); ++r)
      for (std::size_t j = 0; j < c.n(); ++j) w[j] = f.add(w[j], f.mul(coeff[r], g(r, j)));
    out.push_back(w);
  }
  return out;
}

inline std::size_t dist(const Vec& a, const Vec& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

inline std::size_t dist_to(const Vec& x, const std::vector<Vec>& words) {
  std::size_t best = x.size() + 1;
  for (const Vec& w : words) best = std::min(best, dist(x, w));
  return best;
}

// Row-major flat index with axis 0 slowest.
inline std::vector<std::size_t> strides(const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> s(sizes.size(), 1);
  for (std::size_t i = sizes.size() - 1; i-- > 0;) s[i] = s[i + 1] * sizes[i + 1];
  return s;
}

inline std::size_t cells(const std::vector<std::size_t>& sizes) {
  std::size_t c = 1;
  for (std::size_t n : sizes) c *= n;
  return c;
}

// First cell of every axis line: cells whose coordinate along `axis` is zero.
inline std::vector<std::size_t> line_heads(const std::vector<std::size_t>& sizes, std::size_t axis) {
  const auto st = strides(sizes);
  std::vector<std::size_t> out;
  for (std::size_t cell = 0; cell < cells(sizes); ++cell)
    if ((cell / st[axis]) % sizes[axis] == 0) out.push_back(cell);
  return out;
}

// Minimum raw cost sum_i n_i |a_i|_i for every word reachable as sum of
// a_i in C^(i), computed by dynamic programming over the axes and, inside an
// axis, over the lines.
inline std::map<Vec, std::uint64_t> min_raw_costs(const std::vector<LinearCode>& codes) {
  const Field& f = codes[0].field();
  std::vector<std::size_t> sizes;
  for (const auto& c : codes) sizes.push_back(c.n());
  const auto st = strides(sizes);
  const std::size_t total = cells(sizes);
  std::map<Vec, std::uint64_t> acc{{Vec(total, 0), 0}};
  for (std::size_t axis = 0; axis < codes.size(); ++axis) {
    const auto words = codewords(codes[axis]);
    for (std::size_t head : line_heads(sizes, axis)) {
      std::map<Vec, std::uint64_t> next;
      for (const auto& [x, u] : acc)
        for (const Vec& w : words) {
          Vec y = x;
          for (std::size_t t = 0; t < sizes[axis]; ++t) {
            std::size_t cell = head + t * st[axis];
            y[cell] = f.add(y[cell], w[t]);
          }
          const std::uint64_t cost = u + (wt(w) ? sizes[axis] : 0);
          auto it = next.find(y);
          if (it == next.end() || cost < it->second) next[y] = cost;
        }
      acc = std::move(next);
    }
  }
  return acc;
}

// min over nonzero reachable c of |c| / min raw cost; absent when only 0 is reachable.
inline std::optional<Rational> brute_rho(const std::vector<LinearCode>& codes) {
  std::optional<Rational> best;
  for (const auto& [c, u] : min_raw_costs(codes)) {
    if (wt(c) == 0) continue;
    Rational r(static_cast<std::int64_t>(wt(c)), static_cast<std::int64_t>(u));
    if (!best || r < *best) best = r;
  }
  return best;
}

// Every n1 x n2 matrix (flattened) whose columns lie in C1 and rows in C2.
inline std::vector<Vec> product_codewords(const LinearCode& c1, const LinearCode& c2) {
  const std::size_t n1 = c1.n(), n2 = c2.n();
  const auto cols = codewords(c1);
  std::vector<Vec> out;
  std::vector<std::size_t> pick(n2, 0);
  while (true) {
    Vec x(n1 * n2);
    for (std::size_t j = 0; j < n2; ++j)
      for (std::size_t i = 0; i < n1; ++i) x[i * n2 + j] = cols[pick[j]][i];
    bool ok = true;
    for (std::size_t i = 0; i < n1 && ok; ++i) ok = c2.contains(Vec(x.begin() + i * n2, x.begin() + (i + 1) * n2));
    if (ok) out.push_back(x);
    std::size_t j = 0;
    while (j < n2 && pick[j] + 1 == cols.size()) pick[j++] = 0;
    if (j == n2) break;
    ++pick[j];
  }
  return out;
}

// min over x outside C1 (x) C2 of (d(x, C^(1)) + d(x, C^(2))) / (2 d(x, C1 (x) C2)).
inline std::optional<Rational> brute_robustness(const LinearCode& c1, const LinearCode& c2) {
  const Field& f = c1.field();
  const std::size_t n1 = c1.n(), n2 = c2.n();
  const auto w1 = codewords(c1), w2 = codewords(c2), t = product_codewords(c1, c2);
  std::optional<Rational> best;
  for (const Vec& x : all_words(f, n1 * n2)) {
    const std::size_t dt = dist_to(x, t);
    if (dt == 0) continue;
    std::size_t dcols = 0, drows = 0;
    for (std::size_t j = 0; j < n2; ++j) {
      Vec col(n1);
      for (std::size_t i = 0; i < n1; ++i) col[i] = x[i * n2 + j];
      dcols += dist_to(col, w1);
    }
    for (std::size_t i = 0; i < n1; ++i) drows += dist_to(Vec(x.begin() + i * n2, x.begin() + (i + 1) * n2), w2);
    Rational r(static_cast<std::int64_t>(dcols + drows), static_cast<std::int64_t>(2 * dt));
    if (!best || r < *best) best = r;
  }
  return best;
}

// A uniformly random code of dimension k.
inline LinearCode random_code(const Field& f, std::size_t n, std::size_t k, prodexp::Rng& rng) {
  return LinearCode(prodexp::random_subspace(f, n, k, rng));
}

// A pair with C2^perp contained in C1: C1 random of dimension k1, and C2 the
// dual of a random w-dimensional subspace of C1.
inline std::pair<LinearCode, LinearCode> random_css_pair(const Field& f, std::size_t n, std::size_t k1, std::size_t w,
                                                         prodexp::Rng& rng) {
  LinearCode c1 = random_code(f, n, k1, rng);
  const auto coeff = prodexp::random_subspace(f, k1, w, rng);
  prodexp::Matrix rows(f, 0, n);
  for (std::size_t r = 0; r < coeff.dim(); ++r) rows.append_row(c1.generator().combine(coeff.basis().row(r)));
  LinearCode inner = w == 0 ? prodexp::zero_code(f, n) : LinearCode::from_generator(rows);
  return {c1, prodexp::dual(inner)};
}

}  // namespace oracle
