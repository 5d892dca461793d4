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
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"

namespace prodexp {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, Vec data)
      : field_(std::move(f)), rows_(rows), cols_(cols), data_(std::move(data)) {
    detail::require(data_.size() == rows_ * cols_, "matrix data size does not match its shape");
    for (Elem x : data_) detail::require(x < field_.q(), "matrix entry is not a field element");
  }

  static Matrix identity(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      detail::require(rows[r].size() == cols, "inconsistent row lengths");
      for (std::size_t c = 0; c < cols; ++c) {
        detail::require(rows[r][c] < f.q(), "matrix entry is not a field element");
        m(r, c) = rows[r][c];
      }
    }
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
  Vec col_vec(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  const Vec& data() const { return data_; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(std::span<const std::size_t> idx) const {
    Matrix m(field_, rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }

  Matrix select_rows(std::span<const std::size_t> idx) const {
    Matrix m(field_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  void append_row(std::span<const Elem> v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    detail::require(v.size() == cols_, "appended row has wrong length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  bool operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Vec data_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require(a.field() == b.field(), "field mismatch in matrix product");
  detail::require(a.cols() == b.rows(), "shape mismatch in matrix product");
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      Elem x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

/// M * v for a column vector v.
inline Vec mat_vec(const Matrix& m, std::span<const Elem> v) {
  detail::require(v.size() == m.cols(), "shape mismatch in matrix-vector product");
  const Field& f = m.field();
  Vec out(m.rows(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) acc = f.add(acc, f.mul(m(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

inline Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  detail::require(a.field() == b.field(), "field mismatch in vstack");
  detail::require(a.cols() == b.cols(), "column mismatch in vstack");
  Vec d = a.data();
  d.insert(d.end(), b.data().begin(), b.data().end());
  return Matrix(a.field(), a.rows() + b.rows(), a.cols(), std::move(d));
}

/// y += a * x
inline void axpy(const Field& f, std::span<Elem> y, Elem a, std::span<const Elem> x) {
  if (a == 0) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(a, x[i]));
}

inline std::size_t weight(std::span<const Elem> v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

inline std::size_t hamming_distance(std::span<const Elem> a, std::span<const Elem> b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form by Gauss-Jordan elimination: pivots are taken
/// from the leftmost column first, using the topmost available row. Only
/// columns below `pivot_limit` are used as pivots, so an augmented block to
/// the right is carried along without being reduced.
inline RrefResult rref(Matrix m, std::size_t pivot_limit = std::numeric_limits<std::size_t>::max()) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  pivot_limit = std::min(pivot_limit, cols);
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_limit && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Elem inv = f.inv(m(r, c));
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = f.mul(m(r, j), inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Elem factor = f.neg(m(i, c));
      for (std::size_t j = c; j < cols; ++j)
        if (m(r, j) != 0) m(i, j) = f.add(m(i, j), f.mul(factor, m(r, j)));
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.reduced = std::move(m);
  return res;
}

inline std::size_t rank(const Matrix& m) { return rref(m).rank; }

/// q^k, or CapExceeded when it would exceed `cap`.
inline std::uint64_t checked_power(std::uint64_t q, std::uint64_t k, std::uint64_t cap, const std::string& what) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > cap / q) throw CapExceeded(what + ": q^" + std::to_string(k) + " exceeds enumeration cap " +
                                       std::to_string(cap));
    r *= q;
  }
  if (r > cap) throw CapExceeded(what + ": enumeration size exceeds cap " + std::to_string(cap));
  return r;
}

/// Visits offset + every linear combination of the rows of `basis` exactly
/// once, starting with the offset itself. Consecutive visits differ by a
/// multiple of a single basis row, so each step costs O(cols).
template <class Fn>
void for_each_in_coset(Vec v, const Matrix& basis, Fn&& fn) {
  const Field& f = basis.field();
  const std::size_t k = basis.rows();
  detail::require(k == 0 || v.size() == basis.cols(), "coset offset has wrong length");
  const Elem q1 = static_cast<Elem>(f.q() - 1);
  std::vector<Elem> digit(k, 0);
  fn(static_cast<const Vec&>(v));
  while (true) {
    std::size_t j = 0;
    while (j < k && digit[j] == q1) {
      // wrap digit j from q-1 back to 0
      axpy(f, v, f.sub(0, q1), basis.row(j));
      digit[j] = 0;
      ++j;
    }
    if (j == k) return;
    Elem next = static_cast<Elem>(digit[j] + 1);
    axpy(f, v, f.sub(next, digit[j]), basis.row(j));
    digit[j] = next;
    fn(static_cast<const Vec&>(v));
  }
}

/// Visits every linear combination of the rows of `basis`, zero first.
template <class Fn>
void for_each_combination(const Matrix& basis, Fn&& fn) {
  for_each_in_coset(Vec(basis.cols(), 0), basis, std::forward<Fn>(fn));
}

}  // namespace prodexp
