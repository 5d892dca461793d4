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

#include <stdexcept>
#include <string>

namespace prodexp {

/// Thrown when an operation is called outside its domain (bad shapes,
/// mismatched fields, a word that is not in the required code, ...).
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when an exhaustive computation would exceed a configured cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a checked mathematical statement fails. For the constructive
/// lemmas this can only mean an implementation bug.
class TheoryViolation : public std::logic_error {
 public:
  explicit TheoryViolation(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw PreconditionError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
  if (!cond) throw TheoryViolation(msg);
}

}  // namespace detail
}  // namespace prodexp
