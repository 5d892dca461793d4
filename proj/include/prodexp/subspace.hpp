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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"
#include "prodexp/matrix.hpp"

namespace prodexp {

/// A linear subspace of F_q^n, stored as its reduced row-echelon basis.
/// Two subspaces are equal exactly when their bases are identical.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F_q^n.
  Subspace(Field f, std::size_t n) : basis_(std::move(f), 0, n) {}

  static Subspace span_of(const Matrix& rows) {
    RrefResult r = rref(rows);
    Subspace s;
    std::vector<std::size_t> keep(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) keep[i] = i;
    s.basis_ = r.reduced.select_rows(keep);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace span_of(const Field& f, std::size_t n, const std::vector<Vec>& rows) {
    return span_of(Matrix::from_rows(f, rows, n));
  }

  static Subspace full(const Field& f, std::size_t n) { return span_of(Matrix::identity(f, n)); }

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }

  /// Coefficients of v in the basis, or nothing if v is not in the span.
  std::optional<Vec> coordinates(std::span<const Elem> v) const {
    detail::require(v.size() == ambient(), "vector length does not match ambient dimension");
    const Field& f = field();
    Vec w(v.begin(), v.end());
    Vec coeff(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      coeff[i] = w[pivots_[i]];
      axpy(f, w, f.neg(coeff[i]), basis_.row(i));
    }
    if (weight(w) != 0) return std::nullopt;
    return coeff;
  }

  bool contains(std::span<const Elem> v) const { return coordinates(v).has_value(); }

  bool contains(const Subspace& other) const {
    detail::require(other.ambient() == ambient(), "ambient dimension mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  /// Linear combination of the basis rows with the given coefficients.
  Vec combine(std::span<const Elem> coeff) const {
    Vec v(ambient(), 0);
    for (std::size_t i = 0; i < dim(); ++i) axpy(field(), v, coeff[i], basis_.row(i));
    return v;
  }

  /// Orthogonal complement under the standard bilinear form.
  Subspace dual() const {
    const Field& f = field();
    const std::size_t n = ambient();
    std::vector<char> is_pivot(n, 0);
    for (std::size_t p : pivots_) is_pivot[p] = 1;
    Matrix k(f, 0, n);
    for (std::size_t c = 0; c < n; ++c) {
      if (is_pivot[c]) continue;
      Vec v(n, 0);
      v[c] = 1;
      for (std::size_t i = 0; i < dim(); ++i) v[pivots_[i]] = f.neg(basis_(i, c));
      k.append_row(v);
    }
    return span_of(k);
  }

  /// Number of vectors, q^dim, or CapExceeded beyond `cap`.
  std::uint64_t size(std::uint64_t cap) const { return checked_power(field().q(), dim(), cap, "subspace size"); }

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : M v = 0}
inline Subspace kernel(const Matrix& m) {
  Subspace row = Subspace::span_of(m);
  Subspace k = row.dual();
  detail::ensure(k.dim() + row.dim() == m.cols(), "rank-nullity");
  return k;
}

/// Column space of M.
inline Subspace image(const Matrix& m) { return Subspace::span_of(m.transpose()); }

inline Subspace row_space(const Matrix& m) { return Subspace::span_of(m); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  detail::require(a.ambient() == b.ambient(), "ambient dimension mismatch in subspace sum");
  detail::require(a.field() == b.field(), "field mismatch in subspace sum");
  return Subspace::span_of(vstack(a.basis(), b.basis()));
}

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  detail::require(a.ambient() == b.ambient(), "ambient dimension mismatch in subspace intersection");
  detail::require(a.field() == b.field(), "field mismatch in subspace intersection");
  Subspace meet = subspace_sum(a.dual(), b.dual()).dual();
  detail::ensure(subspace_sum(a, b).dim() + meet.dim() == a.dim() + b.dim(), "modular dimension law");
  return meet;
}

/// Kronecker product of two vectors; index i * |b| + j.
inline Vec kron(std::span<const Elem> a, std::span<const Elem> b, const Field& f) {
  Vec out(a.size() * b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = f.mul(a[i], b[j]);
  }
  return out;
}

/// A ⊗ B inside F^{nA * nB}, flattened row-major.
inline Subspace tensor(const Subspace& a, const Subspace& b) {
  detail::require(a.field() == b.field(), "field mismatch in tensor product");
  const Field& f = a.field();
  Matrix m(f, 0, a.ambient() * b.ambient());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m.append_row(kron(a.basis().row(i), b.basis().row(j), f));
  return Subspace::span_of(m);
}

/// Visits every vector of the subspace once, zero first.
template <class Fn>
void for_each_vector(const Subspace& s, Fn&& fn) {
  for_each_combination(s.basis(), std::forward<Fn>(fn));
}

}  // namespace prodexp
