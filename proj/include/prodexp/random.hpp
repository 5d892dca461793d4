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
#include <random>

#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/subspace.hpp"

namespace prodexp {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator. Draws are implemented here rather than through the
/// standard distributions, whose output is implementation-defined, so that
/// a seed produces the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(splitmix64(seed)) {}

  /// Generator for trial `trial` of a run seeded with `seed`.
  static Rng for_trial(std::uint64_t seed, std::uint64_t trial) { return Rng(seed ^ trial); }

  std::uint64_t next() { return eng_(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    detail::require(n > 0, "empty range");
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do x = eng_();
    while (x >= limit);
    return x % n;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 eng_;
};

inline Elem random_element(const Field& f, Rng& rng) { return static_cast<Elem>(rng.below(f.q())); }

inline Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_element(f, rng);
  return m;
}

/// Uniform element of the Grassmannian Gr(n, k): draw uniform k x n
/// matrices until one has full rank and return its row space.
inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, Rng& rng) {
  detail::require(k <= n, "subspace dimension exceeds ambient dimension");
  constexpr int kMaxAttempts = 64;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Subspace s = Subspace::span_of(random_matrix(f, k, n, rng));
    if (s.dim() == k) return s;
  }
  throw TheoryViolation("random_subspace: no full-rank draw in 64 attempts");
}

inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  return random_subspace(f, n, k, rng);
}

}  // namespace prodexp
