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

// Umbrella header: the whole library without the command-line layer.

#pragma once

#include "prodexp/errors.hpp"
#include "prodexp/field.hpp"
#include "prodexp/rational.hpp"
#include "prodexp/matrix.hpp"
#include "prodexp/subspace.hpp"
#include "prodexp/random.hpp"
#include "prodexp/qbinom.hpp"
#include "prodexp/entropy.hpp"
#include "prodexp/code.hpp"
#include "prodexp/tensor.hpp"
#include "prodexp/expansion.hpp"
#include "prodexp/testability.hpp"
#include "prodexp/lemmas.hpp"
#include "prodexp/complex.hpp"
#include "prodexp/harness.hpp"
