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

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

#include "prodexp/errors.hpp"

// Boost 1.74 declares `integer == rational` by forwarding to `rational ==
// integer`, which C++20 rewrites back to the reversed form and recurses.
// Exact-match overloads take precedence over both templates.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, long b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(long b, const rational<std::int64_t>& a) { return a == b; }
}  // namespace boost

namespace prodexp {

using Rational = boost::rational<std::int64_t>;

/// "p/q" with q > 0; integers are still written with a denominator ("1/1").
inline std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

inline Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw PreconditionError("not a rational: '" + s + "'");
  }
}

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace prodexp
