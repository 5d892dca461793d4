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

#include <cmath>
#include <cstdint>

#include "prodexp/errors.hpp"

namespace prodexp {

/// q-ary entropy H_q(x) = x log_q(q-1) - x log_q x - (1-x) log_q(1-x),
/// with 0 log 0 = 0.
inline double entropy_q(std::uint32_t q, double x) {
  detail::require(q >= 2, "entropy base must be at least 2");
  detail::require(x >= 0.0 && x <= 1.0, "entropy argument outside [0,1]");
  const double lq = std::log(static_cast<double>(q));
  double h = 0.0;
  if (x > 0.0) h += x * std::log(static_cast<double>(q - 1)) - x * std::log(x);
  if (x < 1.0) h -= (1.0 - x) * std::log(1.0 - x);
  return h / lq;
}

/// Inverse of H_q on [0, 1 - 1/q], by bisection to absolute tolerance 1e-12.
inline double entropy_q_inv(std::uint32_t q, double y) {
  detail::require(q >= 2, "entropy base must be at least 2");
  detail::require(y >= 0.0 && y <= 1.0, "inverse entropy argument outside [0,1]");
  double lo = 0.0, hi = 1.0 - 1.0 / static_cast<double>(q);
  if (y == 0.0) return 0.0;
  if (y == 1.0) return hi;
  while (hi - lo > 1e-12) {
    double mid = 0.5 * (lo + hi);
    if (entropy_q(q, mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace prodexp
