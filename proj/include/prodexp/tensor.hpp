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
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "prodexp/code.hpp"
#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/subspace.hpp"

namespace prodexp {

inline constexpr std::uint64_t kDefaultCellCap = std::uint64_t{1} << 12;

/// The grid [n_1] x ... x [n_m], flattened row-major with axis 0 slowest.
/// For m = 2 the cell (r, c) sits at r * n_2 + c, so axis-0 lines are the
/// columns of the matrix and axis-1 lines are its rows.
class GridShape {
 public:
  GridShape() = default;
  explicit GridShape(std::vector<std::size_t> sizes, std::uint64_t cap = kDefaultCellCap) : sizes_(std::move(sizes)) {
    detail::require(!sizes_.empty(), "grid needs at least one axis");
    cells_ = 1;
    for (std::size_t n : sizes_) {
      detail::require(n >= 1, "grid axis sizes must be positive");
      if (cells_ > cap / n) throw CapExceeded("grid cell count exceeds cap " + std::to_string(cap));
      cells_ *= n;
    }
    strides_.assign(sizes_.size(), 1);
    for (std::size_t i = sizes_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * sizes_[i + 1];
  }

  std::size_t m() const { return sizes_.size(); }
  std::size_t size(std::size_t axis) const { return sizes_[axis]; }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }
  std::size_t cells() const { return cells_; }
  /// |L_i| = cells / n_i
  std::size_t line_count(std::size_t axis) const { return cells_ / sizes_[axis]; }

  /// Flat index of the first cell of each axis-i line, in increasing order.
  std::vector<std::size_t> line_starts(std::size_t axis) const {
    std::vector<std::size_t> starts;
    starts.reserve(line_count(axis));
    const std::size_t st = strides_[axis], n = sizes_[axis];
    for (std::size_t idx = 0; idx < cells_; ++idx)
      if ((idx / st) % n == 0) starts.push_back(idx);
    return starts;
  }

  bool operator==(const GridShape& o) const { return sizes_ == o.sizes_; }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> strides_;
  std::size_t cells_ = 0;
};

/// A word over F_q indexed by a grid.
class TensorWord {
 public:
  TensorWord() = default;
  TensorWord(Field f, GridShape shape) : field_(std::move(f)), shape_(std::move(shape)), data_(shape_.cells(), 0) {}
  TensorWord(Field f, GridShape shape, Vec data)
      : field_(std::move(f)), shape_(std::move(shape)), data_(std::move(data)) {
    detail::require(data_.size() == shape_.cells(), "word length does not match grid");
    for (Elem x : data_) detail::require(x < field_.q(), "word entry is not a field element");
  }

  static TensorWord from_matrix(const Matrix& m) {
    return TensorWord(m.field(), GridShape({m.rows(), m.cols()}, m.rows() * m.cols() + 1), m.data());
  }

  Matrix to_matrix() const {
    detail::require(shape_.m() == 2, "only two-dimensional words are matrices");
    return Matrix(field_, shape_.size(0), shape_.size(1), data_);
  }

  const Field& field() const { return field_; }
  const GridShape& shape() const { return shape_; }
  const Vec& data() const { return data_; }
  Vec& data() { return data_; }
  Elem operator[](std::size_t i) const { return data_[i]; }
  Elem& operator[](std::size_t i) { return data_[i]; }
  Elem at(std::size_t r, std::size_t c) const { return data_[r * shape_.stride(0) + c]; }
  Elem& at(std::size_t r, std::size_t c) { return data_[r * shape_.stride(0) + c]; }

  std::size_t weight() const { return prodexp::weight(data_); }
  Rational norm() const { return Rational(static_cast<std::int64_t>(weight()), static_cast<std::int64_t>(shape_.cells())); }
  bool is_zero() const { return weight() == 0; }

  Vec line(std::size_t axis, std::size_t start) const {
    Vec v(shape_.size(axis));
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = data_[start + s * shape_.stride(axis)];
    return v;
  }

  void set_line(std::size_t axis, std::size_t start, std::span<const Elem> v) {
    for (std::size_t s = 0; s < v.size(); ++s) data_[start + s * shape_.stride(axis)] = v[s];
  }

  /// |x|_i: the number of nonzero axis-i lines.
  std::size_t line_weight(std::size_t axis) const {
    std::size_t w = 0;
    const std::size_t st = shape_.stride(axis), n = shape_.size(axis);
    for (std::size_t start : shape_.line_starts(axis))
      for (std::size_t s = 0; s < n; ++s)
        if (data_[start + s * st] != 0) {
          ++w;
          break;
        }
    return w;
  }

  /// ||x||_i = |x|_i / |L_i|
  Rational line_norm(std::size_t axis) const {
    return Rational(static_cast<std::int64_t>(line_weight(axis)), static_cast<std::int64_t>(shape_.line_count(axis)));
  }

  TensorWord operator+(const TensorWord& o) const {
    check_compatible(o);
    TensorWord r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
    return r;
  }
  TensorWord operator-(const TensorWord& o) const {
    check_compatible(o);
    TensorWord r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
    return r;
  }

  bool operator==(const TensorWord& o) const {
    return field_ == o.field_ && shape_ == o.shape_ && data_ == o.data_;
  }

 private:
  void check_compatible(const TensorWord& o) const {
    detail::require(field_ == o.field_ && shape_ == o.shape_, "words live on different grids or fields");
  }

  Field field_;
  GridShape shape_;
  Vec data_;
};

/// Codes C_1, ..., C_m over one field, one per grid axis.
class CodeCollection {
 public:
  CodeCollection() = default;
  explicit CodeCollection(std::vector<LinearCode> codes, std::uint64_t cell_cap = kDefaultCellCap)
      : codes_(std::move(codes)) {
    detail::require(!codes_.empty(), "a code collection needs at least one code");
    std::vector<std::size_t> sizes;
    for (const LinearCode& c : codes_) {
      detail::require(c.field() == codes_[0].field(), "codes in a collection must share the field");
      detail::require(c.n() >= 1, "codes in a collection must have positive length");
      sizes.push_back(c.n());
    }
    shape_ = GridShape(std::move(sizes), cell_cap);
  }
  CodeCollection(const LinearCode& c1, const LinearCode& c2, std::uint64_t cell_cap = kDefaultCellCap)
      : CodeCollection(std::vector<LinearCode>{c1, c2}, cell_cap) {}

  std::size_t m() const { return codes_.size(); }
  const LinearCode& code(std::size_t i) const { return codes_[i]; }
  const std::vector<LinearCode>& codes() const { return codes_; }
  const GridShape& shape() const { return shape_; }
  const Field& field() const { return codes_[0].field(); }

  /// Some code is the whole space F_q^{n_i}.
  bool degenerate() const {
    for (const LinearCode& c : codes_)
      if (c.is_full()) return true;
    return false;
  }

 private:
  std::vector<LinearCode> codes_;
  GridShape shape_;
};

inline void require_shape(const TensorWord& x, const CodeCollection& coll) {
  detail::require(x.shape() == coll.shape(), "word shape does not match the code collection");
  detail::require(x.field() == coll.field(), "word field does not match the code collection");
}

/// Whether every axis-i line of x lies in C^(i) for the single axis i.
inline bool in_axis_code(const TensorWord& x, const CodeCollection& coll, std::size_t axis) {
  require_shape(x, coll);
  for (std::size_t start : coll.shape().line_starts(axis))
    if (!coll.code(axis).contains(x.line(axis, start))) return false;
  return true;
}

/// x in C_1 (x) ... (x) C_m
inline bool tensor_membership(const TensorWord& x, const CodeCollection& coll) {
  for (std::size_t i = 0; i < coll.m(); ++i)
    if (!in_axis_code(x, coll, i)) return false;
  return true;
}

/// Basis of C^(i): one copy of C_i on every axis-i line.
inline Subspace axis_code_basis(const CodeCollection& coll, std::size_t axis) {
  const GridShape& g = coll.shape();
  const LinearCode& c = coll.code(axis);
  Matrix rows(coll.field(), 0, g.cells());
  for (std::size_t start : g.line_starts(axis))
    for (std::size_t r = 0; r < c.k(); ++r) {
      TensorWord w(coll.field(), g);
      w.set_line(axis, start, c.generator_matrix().row(r));
      rows.append_row(w.data());
    }
  return Subspace::span_of(rows);
}

/// Basis of C_1 [+] ... [+] C_m = C^(1) + ... + C^(m).
inline Subspace boxplus_basis(const CodeCollection& coll) {
  Subspace s(coll.field(), coll.shape().cells());
  for (std::size_t i = 0; i < coll.m(); ++i) s = subspace_sum(s, axis_code_basis(coll, i));
  if (coll.m() == 2) {
    const std::size_t n1 = coll.code(0).n(), n2 = coll.code(1).n(), k1 = coll.code(0).k(), k2 = coll.code(1).k();
    detail::ensure(s.dim() == n1 * k2 + k1 * n2 - k1 * k2, "dimension of the dual tensor code");
  }
  return s;
}

/// Basis of C_1 (x) ... (x) C_m, built from Kronecker products of generators.
inline Subspace tensor_code_basis(const CodeCollection& coll) {
  Subspace s = coll.code(0).generator();
  std::size_t expected = coll.code(0).k();
  for (std::size_t i = 1; i < coll.m(); ++i) {
    s = tensor(s, coll.code(i).generator());
    expected *= coll.code(i).k();
  }
  detail::ensure(s.dim() == expected, "dimension of the tensor product code");
  return s;
}

/// x in C_1 [+] C_2, tested as H_1 x H_2^T = 0.
inline bool boxplus_membership(const TensorWord& x, const LinearCode& c1, const LinearCode& c2) {
  detail::require(x.shape().m() == 2, "boxplus membership is defined on matrices");
  detail::require(x.shape().size(0) == c1.n() && x.shape().size(1) == c2.n(), "word shape does not match the codes");
  detail::require(x.field() == c1.field() && x.field() == c2.field(), "field mismatch");
  const Matrix xm = x.to_matrix();
  const bool syndrome_zero = (c1.parity_check() * xm * c2.parity_check().transpose()).is_zero();
  if (x.shape().cells() <= 36) {
    const bool in_span = boxplus_basis(CodeCollection(c1, c2)).contains(x.data());
    detail::ensure(syndrome_zero == in_span, "syndrome test and span membership disagree");
  }
  return syndrome_zero;
}

struct LineWeight {
  std::size_t count = 0;
  Rational norm;
};

inline std::vector<LineWeight> line_weights(const TensorWord& x) {
  std::vector<LineWeight> out;
  for (std::size_t i = 0; i < x.shape().m(); ++i) out.push_back({x.line_weight(i), x.line_norm(i)});
  return out;
}

struct Nearest {
  Vec codeword;
  std::size_t distance = 0;
};

/// Exhaustive nearest codeword; ties go to the lexicographically smallest.
inline Nearest nearest_codeword(std::span<const Elem> x, const Subspace& code, std::uint64_t cap = kDefaultEnumCap) {
  detail::require(x.size() == code.ambient(), "word length does not match the code");
  code.size(cap);
  Nearest best{Vec(x.size(), 0), x.size() + 1};
  for_each_vector(code, [&](const Vec& c) {
    std::size_t d = hamming_distance(x, c);
    if (d < best.distance || (d == best.distance && c < best.codeword)) best = {c, d};
  });
  return best;
}

/// Distance from every word of F_q^n to the code, indexed by the base-q
/// number whose most significant digit is position 0.
inline std::vector<std::uint8_t> distance_table(const LinearCode& c, std::uint64_t cap = kDefaultEnumCap) {
  const std::uint64_t total = checked_power(c.field().q(), c.n(), cap, "distance table");
  const std::uint32_t q = c.field().q();
  // Breadth-first search from the codewords in the Cayley graph of unit steps.
  std::vector<std::uint8_t> dist(total, 0xff);
  std::vector<std::uint64_t> frontier;
  for_each_vector(c.generator(), [&](const Vec& v) {
    std::uint64_t id = 0;
    for (Elem e : v) id = id * q + e;
    dist[id] = 0;
    frontier.push_back(id);
  });
  std::vector<std::uint64_t> place(c.n());
  for (std::size_t i = c.n(), p = 1; i-- > 0; p *= q) place[i] = p;
  std::uint8_t level = 0;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    ++level;
    for (std::uint64_t id : frontier)
      for (std::size_t pos = 0; pos < c.n(); ++pos) {
        const std::uint64_t digit = (id / place[pos]) % q;
        const std::uint64_t base = id - digit * place[pos];
        for (std::uint64_t d = 0; d < q; ++d) {
          std::uint64_t nb = base + d * place[pos];
          if (dist[nb] == 0xff) {
            dist[nb] = level;
            next.push_back(nb);
          }
        }
      }
    frontier = std::move(next);
  }
  return dist;
}

/// delta(x, C^(i)): the sum over axis-i lines of d(x|_l, C_i), divided by
/// the number of cells.
inline Rational distance_to_axis_code(const TensorWord& x, const CodeCollection& coll, std::size_t axis,
                                      std::uint64_t cap = kDefaultEnumCap) {
  require_shape(x, coll);
  std::size_t total = 0;
  for (std::size_t start : coll.shape().line_starts(axis))
    total += nearest_codeword(x.line(axis, start), coll.code(axis).generator(), cap).distance;
  return Rational(static_cast<std::int64_t>(total), static_cast<std::int64_t>(coll.shape().cells()));
}

// Word text format: "q m n_1 ... n_m" followed by the entries in flattened
// order. The newline between header and body is optional on input.

inline void write_word(std::ostream& out, const TensorWord& x) {
  out << x.field().q() << ' ' << x.shape().m();
  for (std::size_t n : x.shape().sizes()) out << ' ' << n;
  out << '\n' << format_word(x.data(), x.field().q()) << '\n';
}

/// Single-line form used inside JSON reports.
inline std::string word_to_compact(const TensorWord& x) {
  std::ostringstream os;
  os << x.field().q() << ' ' << x.shape().m();
  for (std::size_t n : x.shape().sizes()) os << ' ' << n;
  os << ' ' << format_word(x.data(), x.field().q());
  return os.str();
}

inline TensorWord read_tensor_word(std::istream& in, std::uint64_t cell_cap = kDefaultCellCap) {
  std::uint64_t q = 0, m = 0;
  detail::require(static_cast<bool>(in >> q >> m), "word header must start with 'q m'");
  detail::require(m >= 1 && m <= 16, "word dimension out of range");
  std::vector<std::size_t> sizes(m);
  for (auto& n : sizes) detail::require(static_cast<bool>(in >> n), "word header is missing axis sizes");
  Field f = Field::of_order(static_cast<std::uint32_t>(q));
  GridShape g(sizes, cell_cap);
  return TensorWord(f, g, read_word(in, g.cells(), f.q()));
}

inline std::string to_text(const TensorWord& x) {
  std::ostringstream os;
  write_word(os, x);
  return os.str();
}

inline TensorWord word_from_text(const std::string& s, std::uint64_t cell_cap = kDefaultCellCap) {
  std::istringstream is(s);
  return read_tensor_word(is, cell_cap);
}

}  // namespace prodexp
