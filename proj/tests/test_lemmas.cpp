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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "prodexp/lemmas.hpp"

using namespace prodexp;

namespace {

std::size_t brute_distance(const LinearCode& c) {
  std::size_t d = c.n() + 1;
  for (const Vec& w : oracle::codewords(c))
    if (oracle::wt(w)) d = std::min(d, oracle::wt(w));
  return d;
}

// Orthogonality to every h1 (x) h2 with h_i in the dual codes.
bool in_boxplus(const Vec& x, const LinearCode& c1, const LinearCode& c2) {
  const Field& f = c1.field();
  const std::size_t n2 = c2.n();
  for (const Vec& h1 : oracle::codewords(dual(c1)))
    for (const Vec& h2 : oracle::codewords(dual(c2))) {
      Elem s = 0;
      for (std::size_t i = 0; i < c1.n(); ++i)
        for (std::size_t j = 0; j < n2; ++j) s = f.add(s, f.mul(f.mul(h1[i], h2[j]), x[i * n2 + j]));
      if (s) return false;
    }
  return true;
}

IndexSet random_subset(Rng& rng, std::size_t n, std::size_t size) {
  IndexSet all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  for (std::size_t i = 0; i < size; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(size);
  std::sort(all.begin(), all.end());
  return all;
}

Vec random_codeword(const LinearCode& c, Rng& rng) {
  Vec coeff(c.k());
  for (Elem& e : coeff) e = random_element(c.field(), rng);
  return c.generator().combine(coeff);
}

// Sum of random columns from C1 on `cols` and random rows from C2 on `rows`.
TensorWord planted_word(const LinearCode& c1, const LinearCode& c2, const IndexSet& cols, const IndexSet& rows,
                        Rng& rng) {
  const Field& f = c1.field();
  TensorWord x(f, GridShape({c1.n(), c2.n()}));
  for (std::size_t j : cols) {
    Vec w = random_codeword(c1, rng);
    for (std::size_t i = 0; i < c1.n(); ++i) x.at(i, j) = f.add(x.at(i, j), w[i]);
  }
  for (std::size_t i : rows) {
    Vec w = random_codeword(c2, rng);
    for (std::size_t j = 0; j < c2.n(); ++j) x.at(i, j) = f.add(x.at(i, j), w[j]);
  }
  return x;
}

// Rank over GF(2) by elimination on bitmask rows.
std::size_t gf2_rank(const TensorWord& x) {
  std::vector<unsigned> rows;
  for (std::size_t i = 0; i < x.shape().size(0); ++i) {
    unsigned m = 0;
    for (std::size_t j = 0; j < x.shape().size(1); ++j) m |= (x.at(i, j) ? 1u : 0u) << j;
    rows.push_back(m);
  }
  std::size_t r = 0;
  for (int bit = 31; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + static_cast<long>(r), rows.end(), [&](unsigned v) { return v >> bit & 1; });
    if (it == rows.end()) continue;
    std::swap(*it, rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] >> bit & 1)) rows[i] ^= rows[r];
    ++r;
  }
  return r;
}

std::size_t log2_exact(std::size_t v) {
  std::size_t k = 0;
  while ((std::size_t{1} << k) < v) ++k;
  return k;
}

// Property (*) over GF(2) by brute force: subspaces are sets of vectors
// (bitmasks over 2^n members) grown by closure from sparse generators.
bool brute_property_star(const LinearCode& u, std::size_t r, std::size_t threshold) {
  const std::size_t n = u.n();
  std::vector<char> in_u(std::size_t{1} << n, 0);
  for (const Vec& w : oracle::codewords(u)) {
    unsigned m = 0;
    for (std::size_t i = 0; i < n; ++i) m |= (w[i] ? 1u : 0u) << i;
    in_u[m] = 1;
  }
  std::vector<unsigned> sparse;
  for (unsigned v = 1; v < (1u << n); ++v)
    if (static_cast<std::size_t>(__builtin_popcount(v)) <= threshold) sparse.push_back(v);
  using Space = std::set<unsigned>;
  std::set<Space> level{Space{0}};
  for (std::size_t dim = 1; dim <= r; ++dim) {
    std::set<Space> next;
    for (const Space& s : level)
      for (unsigned v : sparse) {
        if (s.count(v)) continue;
        Space grown = s;
        for (unsigned w : s) grown.insert(w ^ v);
        next.insert(grown);
      }
    for (const Space& s : next) {
      std::size_t meet = 0;
      for (unsigned w : s) meet += in_u[w];
      if (2 * log2_exact(meet) >= dim) return false;
    }
    level = std::move(next);
  }
  return true;
}

}  // namespace

TEST(ZeroRectangle, Examples) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3);
  RectangleSplit zero = zero_rectangle_decompose(TensorWord(f, GridShape({3, 3})), {1, 2}, {0, 1, 2}, rep, rep);
  EXPECT_TRUE(zero.columns.is_zero() && zero.rows.is_zero());

  TensorWord row(f, GridShape({3, 3}));
  for (std::size_t j = 0; j < 3; ++j) row.at(0, j) = 1;
  RectangleSplit s = zero_rectangle_decompose(row, {1, 2}, {0, 1, 2}, rep, rep);
  EXPECT_TRUE(s.columns.is_zero());
  EXPECT_EQ(s.rows, row);

  // x[i][j] = u_i + v_j with u = v = 100.
  TensorWord x(f, GridShape({3, 3}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x.at(i, j) = static_cast<Elem>((i == 0) ^ (j == 0));
  RectangleSplit t = zero_rectangle_decompose(x, {1, 2}, {1, 2}, rep, rep);
  EXPECT_EQ(t.columns + t.rows, x);
  EXPECT_EQ(t.columns.line_weight(0), 1u);
  EXPECT_EQ(t.rows.line_weight(1), 1u);
}

TEST(ZeroRectangle, RejectsBrokenPreconditions) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3);
  TensorWord ones(f, GridShape({3, 3}));
  for (std::size_t i = 0; i < 9; ++i) ones[i] = 1;
  EXPECT_THROW(zero_rectangle_decompose(ones, {1, 2}, {1, 2}, rep, rep), PreconditionError);
  // Complement of size 3 is not below d = 3.
  EXPECT_THROW(zero_rectangle_decompose(TensorWord(f, GridShape({3, 3})), {}, {0, 1, 2}, rep, rep),
               PreconditionError);
}

TEST(ZeroRectangle, PlantedInstancesReconstruct) {
  Rng rng(70);
  int done = 0;
  while (done < 200) {
    Field f = Field::of_order(done % 3 == 2 ? 3 : 2);
    const std::size_t n1 = 3 + rng.below(3), n2 = 3 + rng.below(3);
    LinearCode c1 = oracle::random_code(f, n1, 1 + rng.below(n1 - 1), rng);
    LinearCode c2 = oracle::random_code(f, n2, 1 + rng.below(n2 - 1), rng);
    const std::size_t d1 = brute_distance(c1), d2 = brute_distance(c2);
    const IndexSet a1 = random_subset(rng, n1, n1 - d1 + 1 + rng.below(d1));
    const IndexSet a2 = random_subset(rng, n2, n2 - d2 + 1 + rng.below(d2));
    const IndexSet out1 = detail::complement(a1, n1), out2 = detail::complement(a2, n2);
    TensorWord x = planted_word(c1, c2, out2, out1, rng);
    RectangleSplit s = zero_rectangle_decompose(x, a1, a2, c1, c2);
    ASSERT_EQ(s.columns + s.rows, x);
    CodeCollection coll(c1, c2);
    EXPECT_TRUE(in_axis_code(s.columns, coll, 0));
    EXPECT_TRUE(in_axis_code(s.rows, coll, 1));
    for (std::size_t j : a2)
      for (std::size_t i = 0; i < n1; ++i) EXPECT_EQ(s.columns.at(i, j), 0u);
    for (std::size_t i : a1)
      for (std::size_t j = 0; j < n2; ++j) EXPECT_EQ(s.rows.at(i, j), 0u);
    ++done;
  }
}

TEST(FindZeroRectangle, Examples) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3);
  auto zero = find_zero_rectangle(TensorWord(f, GridShape({3, 3})), rep, rep, Rational(1, 2), Rational(1, 2));
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->first, (IndexSet{0, 1, 2}));
  EXPECT_EQ(zero->second, (IndexSet{0, 1, 2}));

  TensorWord ones(f, GridShape({3, 3}));
  for (std::size_t i = 0; i < 9; ++i) ones[i] = 1;
  EXPECT_FALSE(find_zero_rectangle(ones, rep, rep, Rational(1), Rational(1)).has_value());

  TensorWord row(f, GridShape({3, 3}));
  for (std::size_t j = 0; j < 3; ++j) row.at(0, j) = 1;
  auto r = find_zero_rectangle(row, rep, rep, Rational(1), Rational(1));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->first, (IndexSet{1, 2}));
  EXPECT_EQ(r->second, (IndexSet{0, 1, 2}));
}

TEST(FindZeroRectangle, FoundRectanglesAreZeroAndLargeEnough) {
  Rng rng(90);
  Field f = Field::of_order(2);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + rng.below(2);
    LinearCode c1 = oracle::random_code(f, n, 1 + rng.below(n - 1), rng);
    LinearCode c2 = oracle::random_code(f, n, 1 + rng.below(n - 1), rng);
    for (const auto& [c, u] : oracle::min_raw_costs({c1, c2})) {
      (void)u;
      TensorWord x(f, GridShape({n, n}), c);
      for (const Rational& a : {Rational(1, 2), Rational(1), Rational(3, 2)}) {
        auto rect = find_zero_rectangle(x, c1, c2, a, a);
        if (!rect) continue;
        const Rational nn = static_cast<std::int64_t>(n), w = static_cast<std::int64_t>(x.weight());
        EXPECT_GE(Rational(static_cast<std::int64_t>(rect->first.size())), nn - w / (a * nn / 2));
        for (std::size_t i : rect->first)
          for (std::size_t j : rect->second) EXPECT_EQ(x.at(i, j), 0u);
      }
    }
  }
}

TEST(FindZeroRectangle, LowWeightLowRankWordsUnderPropertyStar) {
  // alpha_i = w_i / n where (*) holds at weight threshold w_i. At these sizes
  // every nonzero word of the dual tensor code is heavier than
  // alpha_1 alpha_2 n^2 / 4, so only the zero word is in range; the check
  // still runs the full filter.
  Field f = Field::of_order(2);
  const LinearCode rep = repetition_code(f, 5);
  ASSERT_TRUE(has_property_star_threshold(rep.generator(), rep.r(), 2).holds);
  const Rational alpha(2, 5), n(5);
  std::size_t in_range = 0;
  for (const auto& [c, u] : oracle::min_raw_costs({rep, rep})) {
    (void)u;
    TensorWord x(f, GridShape({5, 5}), c);
    if (Rational(static_cast<std::int64_t>(x.weight())) > alpha * alpha * n * n / 4) continue;
    if (gf2_rank(x) > rep.r()) continue;
    ++in_range;
    auto rect = find_zero_rectangle(x, rep, rep, alpha, alpha);
    ASSERT_TRUE(rect.has_value());
    EXPECT_GE(Rational(static_cast<std::int64_t>(rect->first.size())),
              n - Rational(static_cast<std::int64_t>(x.weight())) / (alpha * n / 2));
  }
  EXPECT_EQ(in_range, 1u);
}

TEST(FindZeroRectangle, ChainsIntoZeroRectangleSplit) {
  // Whenever the light rows and columns give a rectangle whose complements
  // are below the code distances, the split exists and uses at most the
  // complement sizes in lines.
  Rng rng(91);
  Field f = Field::of_order(2);
  std::size_t chained = 0;
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 4 + rng.below(2);
    LinearCode c1 = oracle::random_code(f, n, 1 + rng.below(2), rng);
    LinearCode c2 = oracle::random_code(f, n, 1 + rng.below(2), rng);
    const std::size_t d1 = brute_distance(c1), d2 = brute_distance(c2);
    for (int s = 0; s < 30; ++s) {
      TensorWord x = planted_word(c1, c2, random_subset(rng, n, rng.below(2)), random_subset(rng, n, rng.below(2)), rng);
      auto rect = find_zero_rectangle(x, c1, c2, Rational(1), Rational(1));
      if (!rect || n - rect->first.size() >= d1 || n - rect->second.size() >= d2) continue;
      RectangleSplit sp = zero_rectangle_decompose(x, rect->first, rect->second, c1, c2);
      EXPECT_EQ(sp.columns + sp.rows, x);
      ++chained;
    }
  }
  EXPECT_GT(chained, 0u);
}

TEST(ExtendCodewordPart, Examples) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3);
  TensorWord x(f, GridShape({3, 3}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) x.at(i, j) = static_cast<Elem>((i == 0) ^ (j == 1));
  EXPECT_EQ(extend_codeword_part(x, {0, 1, 2}, {0, 1, 2}, rep, rep), x);
  EXPECT_TRUE(extend_codeword_part(x, {1, 2}, {0, 2}, rep, rep).is_zero());
  TensorWord e = extend_codeword_part(x, {0, 1}, {0, 1}, rep, rep);
  EXPECT_TRUE(in_boxplus(e.data(), rep, rep));
  EXPECT_EQ(e.at(0, 0), x.at(0, 0));
  EXPECT_EQ(e.at(0, 1), x.at(0, 1));
  EXPECT_EQ(e.at(1, 0), x.at(1, 0));
  EXPECT_EQ(e.at(1, 1), x.at(1, 1));
  EXPECT_EQ(gf2_rank(e), 2u);
}

TEST(ExtendCodewordPart, PostconditionsOnRandomTriples) {
  Rng rng(33);
  for (int t = 0; t < 200; ++t) {
    Field f = Field::of_order(t % 4 == 3 ? 3 : 2);
    const std::size_t n1 = 2 + rng.below(4), n2 = 2 + rng.below(4);
    LinearCode c1 = oracle::random_code(f, n1, rng.below(n1 + 1), rng);
    LinearCode c2 = oracle::random_code(f, n2, rng.below(n2 + 1), rng);
    IndexSet all1 = random_subset(rng, n1, n1), all2 = random_subset(rng, n2, n2);
    TensorWord x = planted_word(c1, c2, all2, all1, rng);
    const IndexSet a1 = random_subset(rng, n1, rng.below(n1 + 1)), a2 = random_subset(rng, n2, rng.below(n2 + 1));
    TensorWord e = extend_codeword_part(x, a1, a2, c1, c2);
    EXPECT_TRUE(in_boxplus(e.data(), c1, c2));
    for (std::size_t i : a1)
      for (std::size_t j : a2) EXPECT_EQ(e.at(i, j), x.at(i, j));
    EXPECT_EQ(rank(e.to_matrix()), rank(x.to_matrix().select_rows(a1).select_columns(a2)));
  }
}

TEST(RankBound, Examples) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3), even = parity_code(f, 3);
  RankBound zero = rank_bound_check(TensorWord(f, GridShape({3, 3})), rep, rep);
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.column_meet + zero.row_meet, 0u);
  EXPECT_TRUE(zero.holds);
  TensorWord row(f, GridShape({3, 3}));
  row.at(0, 0) = row.at(0, 1) = 1;
  RankBound r = rank_bound_check(row, rep, even);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_GE(r.row_meet, 1u);
  EXPECT_TRUE(r.holds);
  RankBound id = rank_bound_check(TensorWord::from_matrix(Matrix::identity(f, 3)), rep, even);
  EXPECT_EQ(id.rank, 3u);
  EXPECT_EQ(id.column_meet, 1u);
  EXPECT_EQ(id.row_meet, 2u);
  EXPECT_TRUE(id.holds);
}

TEST(RankBound, HoldsOnEveryCodewordOfSmallInstances) {
  Rng rng(44);
  Field f = Field::of_order(2);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + rng.below(2);
    LinearCode c1 = oracle::random_code(f, n, 1 + rng.below(n - 1), rng);
    LinearCode c2 = oracle::random_code(f, n, 1 + rng.below(n - 1), rng);
    for (const auto& [c, u] : oracle::min_raw_costs({c1, c2})) {
      (void)u;
      TensorWord x(f, GridShape({n, n}), c);
      RankBound b = rank_bound_check(x, c1, c2);
      EXPECT_EQ(b.rank, gf2_rank(x));
      EXPECT_TRUE(b.holds);
      EXPECT_LE(b.rank, b.column_meet + b.row_meet);
    }
  }
}

TEST(IntersectionIdentity, Examples) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3), even = parity_code(f, 3);
  EXPECT_TRUE(intersection_identity_check(Subspace(f, 3), Subspace(f, 3), rep, even));
  EXPECT_TRUE(intersection_identity_check(rep.generator(), even.generator(), rep, even));
}

TEST(IntersectionIdentity, RandomOperandsMatchBruteCount) {
  Rng rng(66);
  Field f = Field::of_order(2);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 3 + rng.below(2);
    LinearCode c1 = oracle::random_code(f, n, rng.below(n + 1), rng);
    LinearCode c2 = oracle::random_code(f, n, rng.below(n + 1), rng);
    LinearCode x = oracle::random_code(f, n, rng.below(n + 1), rng);
    LinearCode y = oracle::random_code(f, n, rng.below(n + 1), rng);
    ASSERT_TRUE(intersection_identity_check(x.generator(), y.generator(), c1, c2));
    // |(X (x) Y) cap (C1 [+] C2)| against 2^{a dim Y + dim X b - a b}.
    std::size_t a = 0, b = 0;
    for (const Vec& v : oracle::codewords(x)) a += c1.contains(v);
    for (const Vec& v : oracle::codewords(y)) b += c2.contains(v);
    a = log2_exact(a);
    b = log2_exact(b);
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < x.k(); ++i)
      for (std::size_t j = 0; j < y.k(); ++j) {
        Vec g(n * n);
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q)
            g[p * n + q] = f.mul(x.generator_matrix()(i, p), y.generator_matrix()(j, q));
        gens.push_back(g);
      }
    std::size_t count = 0;
    for (const Vec& coeff : oracle::all_words(f, gens.size())) {
      Vec v(n * n, 0);
      for (std::size_t g = 0; g < gens.size(); ++g)
        if (coeff[g])
          for (std::size_t p = 0; p < n * n; ++p) v[p] = f.add(v[p], gens[g][p]);
      count += in_boxplus(v, c1, c2);
    }
    EXPECT_EQ(count, std::size_t{1} << (a * y.k() + x.k() * b - a * b));
  }
}

TEST(PropertyStar, VacuousAtSmallLengths) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 3);
  StarResult r = has_property_star(rep.generator(), 2);
  EXPECT_EQ(r.threshold, 0u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.subspaces_checked, 0u);
}

TEST(PropertyStar, FullSpaceHasWitness) {
  Field f = Field::of_order(2);
  StarResult r = has_property_star_threshold(Subspace::full(f, 4), 2, 1);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->dim, 1u);
  EXPECT_EQ(r.witness->intersection_dim, 1u);
}

TEST(PropertyStar, RepetitionFiveThresholds) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 5);
  EXPECT_TRUE(has_property_star_threshold(rep.generator(), 4, 2).holds);
  StarResult r = has_property_star_threshold(rep.generator(), 4, 3);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->dim, 2u);
  for (std::size_t i = 0; i < r.witness->basis.rows(); ++i) EXPECT_LE(weight(r.witness->basis.row(i)), 3u);
}

TEST(PropertyStar, MatchesBruteForceOnRandomCodes) {
  Rng rng(123);
  Field f = Field::of_order(2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + rng.below(2);
    LinearCode u = oracle::random_code(f, n, 1 + rng.below(n - 1), rng);
    const std::size_t r = 1 + rng.below(u.r()), threshold = 1 + rng.below(2);
    EXPECT_EQ(has_property_star_threshold(u.generator(), r, threshold).holds, brute_property_star(u, r, threshold))
        << "n=" << n << " k=" << u.k() << " r=" << r << " w=" << threshold;
  }
}

TEST(PropertyStar, WitnessImpliesLargeMeet) {
  Rng rng(7);
  Field f = Field::of_order(3);
  for (int t = 0; t < 10; ++t) {
    LinearCode u = oracle::random_code(f, 4, 2, rng);
    StarResult r = has_property_star_threshold(u.generator(), 2, 2);
    if (r.holds) continue;
    const Subspace v = Subspace::span_of(r.witness->basis);
    EXPECT_EQ(v.dim(), r.witness->dim);
    EXPECT_GE(2 * subspace_intersection(u.generator(), v).dim(), v.dim());
  }
}

TEST(PropertyStar, CapIsEnforced) {
  Field f = Field::of_order(2);
  LinearCode rep = repetition_code(f, 8);
  EXPECT_THROW(has_property_star_threshold(rep.generator(), 7, 3, 10), CapExceeded);
}
