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

#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "prodexp/matrix.hpp"
#include "prodexp/qbinom.hpp"
#include "prodexp/random.hpp"
#include "prodexp/subspace.hpp"

using namespace prodexp;

namespace {

Field gf2() { return Field::of_order(2); }

Matrix bits(const std::vector<std::string>& rows) {
  std::vector<Vec> v;
  for (const auto& r : rows) {
    Vec x;
    for (char c : r) x.push_back(static_cast<Elem>(c - '0'));
    v.push_back(x);
  }
  return Matrix::from_rows(gf2(), v, rows.empty() ? 0 : rows[0].size());
}

// Every vector of F_q^n, in odometer order.
std::vector<Vec> all_vectors(const Field& f, std::size_t n) {
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

// Set of vectors in the span of `rows`, by closure under addition and scaling.
std::set<Vec> span_set(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
  std::set<Vec> s{Vec(n, 0)};
  for (const Vec& r : rows) {
    std::set<Vec> next;
    for (const Vec& v : s)
      for (Elem a = 0; a < f.q(); ++a) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = f.add(w[i], f.mul(a, r[i]));
        next.insert(w);
      }
    s = std::move(next);
  }
  return s;
}

bool is_rref(const Matrix& m) {
  std::size_t last = 0;
  bool first = true;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t c = 0;
    while (c < m.cols() && m(r, c) == 0) ++c;
    if (c == m.cols()) return false;  // zero row
    if (!first && c <= last) return false;
    if (m(r, c) != 1) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (i != r && m(i, c) != 0) return false;
    last = c;
    first = false;
  }
  return true;
}

}  // namespace

TEST(Rref, ZeroMatrix) {
  auto r = rref(Matrix(gf2(), 3, 4));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_TRUE(r.pivots.empty());
  EXPECT_TRUE(r.reduced.is_zero());
}

TEST(Rref, Identity) {
  auto r = rref(Matrix::identity(gf2(), 3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(r.reduced, Matrix::identity(gf2(), 3));
}

TEST(Rref, DependentRows) {
  auto r = rref(bits({"110", "011", "101"}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, PivotLimitLeavesAugmentedColumnsAlone) {
  // [A | b] with A = I_2 and b = (1,1); restricting pivots to A keeps b.
  auto r = rref(bits({"101", "011"}), 2);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.reduced(0, 2), 1);
  EXPECT_EQ(r.reduced(1, 2), 1);
}

TEST(Kernel, SingleParityCheck) {
  Subspace k = kernel(bits({"111"}));
  EXPECT_EQ(k.dim(), 2u);
  for (std::size_t i = 0; i < k.dim(); ++i) EXPECT_EQ(weight(k.basis().row(i)) % 2, 0u);
}

TEST(Kernel, OfIdentityIsZero) { EXPECT_TRUE(kernel(Matrix::identity(gf2(), 4)).is_zero()); }

TEST(Image, OfZeroMatrixIsZero) { EXPECT_TRUE(image(Matrix(gf2(), 3, 2)).is_zero()); }

TEST(Subspace, IdempotenceAndZero) {
  Subspace a = row_space(bits({"1010", "0111"}));
  Subspace z(gf2(), 4);
  EXPECT_EQ(subspace_sum(a, a), a);
  EXPECT_EQ(subspace_intersection(a, a), a);
  EXPECT_EQ(subspace_sum(a, z), a);
  EXPECT_EQ(subspace_intersection(a, z), z);
}

TEST(Subspace, IntersectionMatchesMembershipOracle) {
  Subspace a = row_space(bits({"100", "010"}));
  Subspace b = row_space(bits({"110", "001"}));
  Subspace meet = subspace_intersection(a, b);
  EXPECT_EQ(meet, row_space(bits({"110"})));
  std::size_t members = 0;
  for (const Vec& v : all_vectors(gf2(), 3)) members += a.contains(v) && b.contains(v);
  EXPECT_EQ(members, 2u);
}

TEST(Subspace, AmbientMismatchRejected) {
  EXPECT_THROW(subspace_sum(Subspace(gf2(), 3), Subspace(gf2(), 4)), PreconditionError);
  EXPECT_THROW(subspace_intersection(Subspace(gf2(), 3), Subspace(gf2(), 4)), PreconditionError);
}

TEST(Subspace, EnumerationVisitsEachVectorOnce) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    Field f = Field::of_order(q);
    Rng rng(11 + q);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(f, 3, 4, rng);
      Subspace s = row_space(m);
      std::set<Vec> seen;
      for_each_vector(s, [&](const Vec& v) { EXPECT_TRUE(seen.insert(v).second); });
      std::vector<Vec> rows;
      for (std::size_t i = 0; i < 3; ++i) rows.push_back(m.row_vec(i));
      EXPECT_EQ(seen, span_set(f, 4, rows));
    }
  }
}

TEST(Subspace, RandomMatricesRankNullityAndRref) {
  for (std::uint32_t q : {2u, 3u, 4u}) {
    Field f = Field::of_order(q);
    Rng rng(q);
    for (std::size_t n = 1; n <= 8; ++n) {
      for (int t = 0; t < 500 / 8; ++t) {
        std::size_t rows = 1 + rng.below(8);
        Matrix m = random_matrix(f, rows, n, rng);
        auto r = rref(m);
        ASSERT_LE(r.rank, std::min(rows, n));
        EXPECT_EQ(rank(r.reduced), r.rank);
        Subspace k = kernel(m);
        EXPECT_EQ(k.dim() + r.rank, n);
        EXPECT_TRUE((m * k.basis().transpose()).is_zero());
        EXPECT_EQ(image(m).dim(), r.rank);
        EXPECT_TRUE(is_rref(row_space(m).basis()));
      }
    }
  }
}

TEST(Subspace, ModularLawOnRandomPairs) {
  Rng rng(99);
  for (int t = 0; t < 500; ++t) {
    Field f = Field::of_order(t % 2 ? 3 : 2);
    std::size_t n = 1 + rng.below(6);
    Subspace a = random_subspace(f, n, rng.below(n + 1), rng);
    Subspace b = random_subspace(f, n, rng.below(n + 1), rng);
    Subspace s = subspace_sum(a, b), m = subspace_intersection(a, b);
    EXPECT_EQ(s.dim() + m.dim(), a.dim() + b.dim());
    EXPECT_TRUE(s.contains(a) && s.contains(b));
    EXPECT_TRUE(a.contains(m) && b.contains(m));
  }
}

TEST(Subspace, DualIsInvolution) {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    Field f = Field::of_order(t % 2 ? 5 : 4);
    std::size_t n = 1 + rng.below(6);
    Subspace a = random_subspace(f, n, rng.below(n + 1), rng);
    EXPECT_EQ(a.dual().dual(), a);
    EXPECT_EQ(a.dual().dim(), n - a.dim());
  }
}

TEST(Subspace, TensorDimensionAndMembership) {
  Field f = Field::of_order(3);
  Subspace a = row_space(Matrix::from_rows(f, {{1, 1, 1}}, 3));
  Subspace b = row_space(Matrix::from_rows(f, {{1, 2}, {0, 1}}, 2));
  Subspace t = tensor(a, b);
  EXPECT_EQ(t.dim(), 2u);
  EXPECT_TRUE(t.contains(Vec{1, 2, 1, 2, 1, 2}));
  EXPECT_FALSE(t.contains(Vec{1, 2, 0, 0, 0, 0}));
}

TEST(RandomSubspace, EdgeDimensions) {
  Field f = Field::of_order(2);
  EXPECT_TRUE(random_subspace(f, 5, 0, 1u).is_zero());
  EXPECT_TRUE(random_subspace(f, 5, 5, 1u).is_full());
  EXPECT_THROW(random_subspace(f, 3, 4, 1u), PreconditionError);
}

TEST(RandomSubspace, DeterministicGivenSeed) {
  Field f = Field::of_order(3);
  EXPECT_EQ(random_subspace(f, 7, 3, 42u), random_subspace(f, 7, 3, 42u));
  EXPECT_NE(random_subspace(f, 7, 3, 42u), random_subspace(f, 7, 3, 43u));
}

TEST(RandomSubspace, UniformOverLinesOfF2Cubed) {
  Field f = Field::of_order(2);
  Rng rng(2024);
  std::map<Vec, int> counts;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) counts[random_subspace(f, 3, 1, rng).basis().row_vec(0)]++;
  ASSERT_EQ(counts.size(), 7u);
  const double p = 1.0 / 7, sigma = std::sqrt(trials * p * (1 - p));
  for (const auto& [line, c] : counts) EXPECT_NEAR(c, trials * p, 5 * sigma);
}

TEST(Qbinom, SmallValues) {
  EXPECT_EQ(qbinom(5, 0, 3), 1);
  EXPECT_EQ(qbinom(3, 1, 2), 7);
  EXPECT_EQ(qbinom(4, 2, 2), 35);
  EXPECT_THROW(qbinom(2, 3, 2), PreconditionError);
}

TEST(Qbinom, MatchesBruteForceSubspaceCount) {
  for (std::uint32_t q : {2u, 3u}) {
    Field f = Field::of_order(q);
    const std::size_t n = 4;
    auto vecs = all_vectors(f, n);
    std::vector<std::set<Vec>> by_dim(n + 1);
    // Every subspace of F_q^4 is spanned by at most 4 vectors; spans of pairs
    // and triples of vectors plus the extremes cover dimensions 0..3.
    by_dim[0].insert(Subspace(f, n).basis().data());
    by_dim[n].insert(Subspace::full(f, n).basis().data());
    for (const Vec& a : vecs)
      for (const Vec& b : vecs) {
        Subspace s = Subspace::span_of(f, n, {a, b});
        by_dim[s.dim()].insert(s.basis().data());
        if (q == 2)
          for (const Vec& c : vecs) {
            Subspace t = Subspace::span_of(f, n, {a, b, c});
            by_dim[t.dim()].insert(t.basis().data());
          }
      }
    EXPECT_EQ(BigInt(by_dim[1].size()), qbinom(n, 1, q));
    EXPECT_EQ(BigInt(by_dim[2].size()), qbinom(n, 2, q));
    if (q == 2) {
      EXPECT_EQ(BigInt(by_dim[3].size()), qbinom(n, 3, q));
    }
  }
}

TEST(Qbinom, TwoSidedBound) {
  for (std::uint64_t q : {2u, 3u, 4u, 5u})
    for (std::uint64_t n = 0; n <= 8; ++n)
      for (std::uint64_t k = 0; k <= n; ++k) {
        BigInt v = qbinom(n, k, q), lo = big_pow(q, k * (n - k));
        EXPECT_LE(lo, v);
        EXPECT_LE(v, 4 * lo);
      }
}
