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
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/expansion.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"
#include "prodexp/tensor.hpp"

namespace prodexp {

/// One graded piece C^i: a based space whose coordinates are grouped into
/// labeled blocks.
struct Term {
  std::vector<std::string> labels;
  std::vector<std::size_t> block_dims;
  /// Block index of every coordinate.
  std::vector<std::size_t> block_of;

  std::size_t dim() const { return block_of.size(); }
  std::size_t blocks() const { return labels.size(); }
};

/// Cochain complex C^0 -> C^1 -> ... over F_q. Coboundary i is a
/// dim C^{i+1} x dim C^i matrix acting on column vectors.
class BasedComplex {
 public:
  BasedComplex(Field f, std::vector<Term> terms, std::vector<Matrix> coboundaries,
               std::vector<std::size_t> factor_lengths = {})
      : field_(std::move(f)), terms_(std::move(terms)), delta_(std::move(coboundaries)),
        lengths_(std::move(factor_lengths)) {
    detail::require(!terms_.empty(), "a complex needs at least one term");
    detail::require(delta_.size() + 1 == terms_.size(), "need one coboundary between consecutive terms");
    for (const Term& t : terms_) {
      detail::require(t.labels.size() == t.block_dims.size(), "every block needs a label and a dimension");
      std::vector<std::size_t> count(t.blocks(), 0);
      for (std::size_t b : t.block_of) {
        detail::require(b < t.blocks(), "coordinate assigned to a missing block");
        ++count[b];
      }
      detail::require(count == t.block_dims, "block dimensions must sum to the term dimension");
    }
    for (std::size_t i = 0; i < delta_.size(); ++i) {
      detail::require(delta_[i].field() == field_ || delta_[i].empty(), "coboundary over the wrong field");
      detail::require(delta_[i].rows() == terms_[i + 1].dim() && delta_[i].cols() == terms_[i].dim(),
                      "coboundary shape does not match the terms");
    }
    for (std::size_t i = 0; i + 1 < delta_.size(); ++i) {
      if (delta_[i].empty() || delta_[i + 1].empty()) continue;
      detail::ensure((delta_[i + 1] * delta_[i]).is_zero(), "coboundary squares to zero");
    }
  }

  const Field& field() const { return field_; }
  std::size_t length() const { return terms_.size(); }
  const Term& term(std::size_t i) const { return terms_.at(i); }
  const Matrix& coboundary(std::size_t i) const { return delta_.at(i); }
  const std::vector<std::size_t>& factor_lengths() const { return lengths_; }

  /// delta_i x, or the zero vector of length 0 at the top degree.
  Vec apply(std::size_t i, std::span<const Elem> x) const {
    if (i + 1 >= terms_.size()) return {};
    if (delta_[i].empty()) return Vec(terms_[i + 1].dim(), 0);
    return mat_vec(delta_[i], x);
  }

  /// Number of nonzero blocks of a cochain in C^i.
  std::size_t block_weight(std::size_t i, std::span<const Elem> x) const {
    const Term& t = term(i);
    detail::require(x.size() == t.dim(), "cochain has the wrong length");
    std::vector<char> hit(t.blocks(), 0);
    std::size_t w = 0;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (x[c] != 0 && !hit[t.block_of[c]]) {
        hit[t.block_of[c]] = 1;
        ++w;
      }
    return w;
  }

  Rational block_norm(std::size_t i, std::span<const Elem> x) const {
    return Rational(static_cast<std::int64_t>(block_weight(i, x)), static_cast<std::int64_t>(term(i).blocks()));
  }

 private:
  Field field_;
  std::vector<Term> terms_;
  std::vector<Matrix> delta_;
  std::vector<std::size_t> lengths_;
};

/// C(g) = (F^k{*} -> F^n), x -> g^T x, for a k x n encoder g of rank k.
inline BasedComplex complex_from_encoder(const Matrix& g) {
  detail::require(rank(g) == g.rows(), "encoder must have full row rank");
  const std::size_t k = g.rows(), n = g.cols();
  Term t0{{"*"}, {k}, std::vector<std::size_t>(k, 0)};
  Term t1;
  for (std::size_t j = 0; j < n; ++j) {
    t1.labels.push_back(std::to_string(j));
    t1.block_dims.push_back(1);
    t1.block_of.push_back(j);
  }
  return BasedComplex(g.field(), {t0, t1}, {g.transpose()}, {n});
}

inline BasedComplex complex_from_code(const LinearCode& c) {
  const Matrix& g = c.generator_matrix();
  if (g.rows() == 0) return complex_from_encoder(Matrix(c.field(), 0, c.n()));
  return complex_from_encoder(g);
}

/// Kronecker product; entry (i, j) of a times b occupies the block at
/// (i * b.rows(), j * b.cols()).
inline Matrix kronecker(const Matrix& a, const Matrix& b) {
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Elem x = a(i, j);
      if (x == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(i * b.rows() + r, j * b.cols() + c) = f.mul(x, b(r, c));
    }
  return out;
}

namespace detail {

// Multidegrees d with d_i < len_i and sum d = total, lexicographic.
inline std::vector<std::vector<std::size_t>> multidegrees(const std::vector<std::size_t>& lens, std::size_t total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> d(lens.size(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
    if (i == lens.size()) {
      if (left == 0) out.push_back(d);
      return;
    }
    for (std::size_t v = 0; v < lens[i] && v <= left; ++v) {
      d[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

}  // namespace detail

/// Tensor product C_1 (x) ... (x) C_m. Term j is the direct sum, over
/// multidegrees in lexicographic order, of the tensor products of factor
/// terms in Kronecker order. The coboundary on a summand is
/// sum_i (-1)^{d_1 + ... + d_{i-1}} I (x) ... (x) delta_i (x) ... (x) I.
inline BasedComplex tensor_complex(const std::vector<BasedComplex>& factors, std::uint64_t dim_cap = kDefaultCellCap) {
  detail::require(!factors.empty(), "tensor product needs at least one factor");
  const Field& f = factors[0].field();
  std::vector<std::size_t> lens, lengths;
  for (const BasedComplex& c : factors) {
    detail::require(c.field() == f, "factors must share the field");
    lens.push_back(c.length());
    lengths.insert(lengths.end(), c.factor_lengths().begin(), c.factor_lengths().end());
  }
  const std::size_t m = factors.size();
  std::size_t top = 0;
  for (std::size_t l : lens) top += l - 1;

  struct Summand {
    std::vector<std::size_t> deg;
    std::size_t offset, dim;
  };
  std::vector<std::vector<Summand>> layout(top + 1);
  std::vector<Term> terms(top + 1);
  for (std::size_t j = 0; j <= top; ++j) {
    std::size_t offset = 0;
    for (const auto& deg : detail::multidegrees(lens, j)) {
      std::size_t dim = 1;
      for (std::size_t i = 0; i < m; ++i) dim *= factors[i].term(deg[i]).dim();
      if (offset + dim > dim_cap) throw CapExceeded("tensor complex term exceeds dimension cap " + std::to_string(dim_cap));
      layout[j].push_back({deg, offset, dim});
      // Blocks are tuples of factor blocks, first factor slowest.
      Term& t = terms[j];
      const std::size_t first_block = t.blocks();
      std::vector<std::size_t> block_stride(m, 1);
      for (std::size_t i = m - 1; i-- > 0;) block_stride[i] = block_stride[i + 1] * factors[i + 1].term(deg[i + 1]).blocks();
      std::size_t nblocks = 1;
      for (std::size_t i = 0; i < m; ++i) nblocks *= factors[i].term(deg[i]).blocks();
      for (std::size_t b = 0; b < nblocks; ++b) {
        std::string label = "(";
        std::size_t bdim = 1;
        for (std::size_t i = 0; i < m; ++i) {
          const Term& ft = factors[i].term(deg[i]);
          const std::size_t bi = (b / block_stride[i]) % ft.blocks();
          label += (i ? "," : "") + ft.labels[bi];
          bdim *= ft.block_dims[bi];
        }
        t.labels.push_back(label + ")");
        t.block_dims.push_back(bdim);
      }
      std::vector<std::size_t> coord_stride(m, 1);
      for (std::size_t i = m - 1; i-- > 0;) coord_stride[i] = coord_stride[i + 1] * factors[i + 1].term(deg[i + 1]).dim();
      for (std::size_t c = 0; c < dim; ++c) {
        std::size_t b = 0;
        for (std::size_t i = 0; i < m; ++i) {
          const Term& ft = factors[i].term(deg[i]);
          b += ft.block_of[(c / coord_stride[i]) % ft.dim()] * block_stride[i];
        }
        t.block_of.push_back(first_block + b);
      }
      offset += dim;
    }
  }

  std::vector<Matrix> delta;
  for (std::size_t j = 0; j < top; ++j) {
    Matrix d(f, terms[j + 1].dim(), terms[j].dim());
    for (const Summand& src : layout[j]) {
      std::size_t sign_deg = 0;
      for (std::size_t i = 0; i < m; ++i) {
        if (src.deg[i] + 1 < lens[i]) {
          std::vector<std::size_t> tgt_deg = src.deg;
          ++tgt_deg[i];
          const Summand& tgt = *std::find_if(layout[j + 1].begin(), layout[j + 1].end(),
                                             [&](const Summand& s) { return s.deg == tgt_deg; });
          Matrix piece = Matrix::identity(f, 1);
          for (std::size_t l = 0; l < m; ++l) {
            const Matrix factor = l == i ? factors[l].coboundary(src.deg[l])
                                         : Matrix::identity(f, factors[l].term(src.deg[l]).dim());
            piece = kronecker(piece, factor);
          }
          const Elem sign = sign_deg % 2 ? f.neg(1) : Elem{1};
          for (std::size_t r = 0; r < piece.rows(); ++r)
            for (std::size_t c = 0; c < piece.cols(); ++c)
              if (piece(r, c))
                d(tgt.offset + r, src.offset + c) = f.add(d(tgt.offset + r, src.offset + c), f.mul(sign, piece(r, c)));
        }
        sign_deg += src.deg[i];
      }
    }
    delta.push_back(std::move(d));
  }
  return BasedComplex(f, std::move(terms), std::move(delta), std::move(lengths));
}

/// C(g_1) (x) ... (x) C(g_m) from the canonical generators of a collection.
inline BasedComplex collection_complex(const CodeCollection& coll, std::uint64_t dim_cap = kDefaultCellCap) {
  std::vector<BasedComplex> factors;
  for (const LinearCode& c : coll.codes()) factors.push_back(complex_from_code(c));
  return tensor_complex(factors, dim_cap);
}

/// Z^i = ker delta_i (all of C^i at the top degree).
inline Subspace cocycles(const BasedComplex& cx, std::size_t i) {
  if (i + 1 >= cx.length()) return Subspace::full(cx.field(), cx.term(i).dim());
  return kernel(cx.coboundary(i));
}

/// B^i = im delta_{i-1} ({0} at degree 0).
inline Subspace coboundaries(const BasedComplex& cx, std::size_t i) {
  if (i == 0) return Subspace(cx.field(), cx.term(0).dim());
  return image(cx.coboundary(i - 1));
}

inline std::size_t cohomology_dim(const BasedComplex& cx, std::size_t i) {
  detail::require(i < cx.length(), "degree out of range");
  return cocycles(cx, i).dim() - coboundaries(cx, i).dim();
}

/// h^i = min over x in C^i \ B^i of ||delta x|| / min_{b in B^i} ||x - b||,
/// with block-weight norms. Absent when B^i = C^i. Requires equal factor
/// lengths, since the block norm is only meaningful there.
inline std::optional<Rational> cheeger_constant(const BasedComplex& cx, std::size_t i,
                                                std::uint64_t cap = std::uint64_t{1} << 22) {
  detail::require(i < cx.length(), "degree out of range");
  const auto& lens = cx.factor_lengths();
  detail::require(std::all_of(lens.begin(), lens.end(), [&](std::size_t n) { return n == lens.front(); }),
                  "Cheeger constants are only defined here for equal factor lengths");
  const Field& f = cx.field();
  const std::uint32_t q = f.q();
  const std::size_t dim = cx.term(i).dim();
  const Subspace b = coboundaries(cx, i);
  if (b.dim() == dim) return std::nullopt;
  checked_power(q, dim, cap, "Cheeger enumeration");

  // Coset representative: clear the pivot coordinates of the RREF basis of B^i.
  auto coset_key = [&](const Vec& x) {
    Vec y = x;
    for (std::size_t r = 0; r < b.dim(); ++r) {
      const Elem c = y[b.pivots()[r]];
      if (c) axpy(f, y, f.neg(c), b.basis().row(r));
    }
    std::uint64_t key = 0;
    for (Elem e : y) key = key * q + e;
    return key;
  };
  struct Coset {
    std::size_t min_block = SIZE_MAX;
    std::size_t delta_block = 0;
    bool zero = false;
  };
  std::unordered_map<std::uint64_t, Coset> cosets;
  for_each_combination(Matrix::identity(f, dim), [&](const Vec& x) {
    Coset& c = cosets[coset_key(x)];
    const std::size_t w = cx.block_weight(i, x);
    c.min_block = std::min(c.min_block, w);
    if (w == 0) c.zero = true;
    const Vec dx = cx.apply(i, x);
    c.delta_block = dx.empty() ? 0 : cx.block_weight(i + 1, dx);
  });
  const std::int64_t here = static_cast<std::int64_t>(cx.term(i).blocks());
  const std::int64_t next = i + 1 < cx.length() ? static_cast<std::int64_t>(cx.term(i + 1).blocks()) : 1;
  std::optional<Rational> best;
  for (const auto& [key, c] : cosets) {
    (void)key;
    if (c.zero) continue;
    const Rational h(static_cast<std::int64_t>(c.delta_block) * here, next * static_cast<std::int64_t>(c.min_block));
    if (!best || h < *best) best = h;
  }
  return best;
}

struct CheegerIdentity {
  Rational rho;
  std::optional<Rational> cheeger;
  std::size_t m = 0;
  bool holds = false;
};

/// Compares rho(C_1, ..., C_m) with h^{m-1} / m on the complex of the
/// collection.
inline CheegerIdentity verify_expansion_cheeger_identity(const CodeCollection& coll,
                                                         std::uint64_t cap = std::uint64_t{1} << 22) {
  CheegerIdentity out;
  out.m = coll.m();
  out.rho = expansion_factor(coll, cap).rho;
  const BasedComplex cx = collection_complex(coll);
  out.cheeger = cheeger_constant(cx, coll.m() - 1, cap);
  out.holds = out.cheeger && *out.cheeger / static_cast<std::int64_t>(coll.m()) == out.rho;
  return out;
}

struct ComplexSummary {
  std::vector<std::size_t> term_dims, block_counts, cohomology;
};

inline ComplexSummary summarize(const BasedComplex& cx) {
  ComplexSummary s;
  for (std::size_t i = 0; i < cx.length(); ++i) {
    s.term_dims.push_back(cx.term(i).dim());
    s.block_counts.push_back(cx.term(i).blocks());
    s.cohomology.push_back(cohomology_dim(cx, i));
  }
  return s;
}

}  // namespace prodexp
