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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

#include "prodexp/errors.hpp"

namespace prodexp {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

/// Gaussian binomial coefficient [n k]_q: the number of k-dimensional
/// subspaces of F_q^n. Checks q^{k(n-k)} <= [n k]_q <= 4 q^{k(n-k)}.
inline BigInt qbinom(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  detail::require(k <= n, "qbinom requires k <= n");
  detail::require(q >= 2, "qbinom requires q >= 2");
  BigInt num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    num *= big_pow(q, n - i) - 1;
    den *= big_pow(q, k - i) - 1;
  }
  detail::ensure(num % den == 0, "q-binomial product is not an integer");
  BigInt r = num / den;
  BigInt lower = big_pow(q, k * (n - k));
  detail::ensure(lower <= r && r <= 4 * lower, "q-binomial two-sided bound");
  return r;
}

}  // namespace prodexp
