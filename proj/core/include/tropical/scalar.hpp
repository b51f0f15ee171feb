// Copyright 2026 The Tropical Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace tropical {

// Scalars of the max-plus semiring live in ℝ ∪ {ε} and are stored as plain
// doubles. ε is encoded as -infinity, which IEEE arithmetic already treats as
// absorbing for + (against finite values) and neutral for max. +infinity and
// NaN are never produced by library operations.
using Scalar = double;

inline constexpr Scalar kEpsilon = -std::numeric_limits<double>::infinity();

// The multiplicative unit of the semiring.
inline constexpr Scalar kUnit = 0.0;

inline constexpr double kDefaultTolerance = 1e-9;

// Absolute tolerance used by every approximate comparison. Zero means exact.
struct Tolerance {
  double abs_tol = kDefaultTolerance;

  constexpr Tolerance() = default;
  constexpr explicit Tolerance(double tol) : abs_tol(tol) {}
};

constexpr bool is_epsilon(Scalar a) { return a == kEpsilon; }

inline bool is_finite(Scalar a) { return std::isfinite(a); }

// a ⊕ b
constexpr Scalar oplus(Scalar a, Scalar b) { return std::max(a, b); }

// a ⊗ b. ε absorbs, so ε ⊗ a = ε even when a = ε.
constexpr Scalar otimes(Scalar a, Scalar b) {
  if (is_epsilon(a) || is_epsilon(b)) return kEpsilon;
  return a + b;
}

// a ≤ b up to tol; ε is below everything.
constexpr bool leq(Scalar a, Scalar b, Tolerance tol = {}) {
  if (is_epsilon(a)) return true;
  if (is_epsilon(b)) return false;
  return a <= b + tol.abs_tol;
}

constexpr bool near(Scalar a, Scalar b, Tolerance tol = {}) {
  if (is_epsilon(a) || is_epsilon(b)) return a == b;
  return (a - b <= tol.abs_tol) && (b - a <= tol.abs_tol);
}

}  // namespace tropical
