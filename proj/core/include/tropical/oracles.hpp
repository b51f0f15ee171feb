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

// Slow exhaustive reference implementations for tests. These depend on the
// scalar/matrix layer only and are never called by the solvers.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tropical/errors.hpp"
#include "tropical/lp_duality.hpp"
#include "tropical/matrix.hpp"

namespace tropical::oracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyBox : public Error {
 public:
  using Error::Error;
};

// Inclusive integer bounds per coordinate.
struct Box {
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
  std::uint64_t cap = kDefaultEnumerationCap;

  std::size_t dimension() const { return lower.size(); }
  // Number of lattice points; throws CapExceeded beyond cap.
  std::uint64_t volume() const;
};

Box uniform_box(std::size_t dimension, std::int64_t lower, std::int64_t upper);

struct IntPoint {
  Vector point;
  Scalar value;
};

// Max mean over all elementary cycles found by depth-first search. n ≤ 8.
Scalar brute_cycle_mean(const Matrix& a);

// I ⊕ A ⊕ ... ⊕ A^{n-1} by repeated products. Throws DivergentStar when a
// positive cycle exists (A^n exceeds the partial sum).
Matrix brute_star(const Matrix& a);

// Exhaustive minimisation of πᵀ ⊗ b over integer π in the box with
// πᵀ ⊗ A ≥ cᵀ (within tol). Returns the greatest minimiser in the box.
// Throws EmptyBox if nothing in the box is feasible.
IntPoint brute_dual_integer(const LpInstance& inst, const Box& box,
                            Tolerance tol = {});

// Exhaustive maximisation of cᵀ ⊗ x over integer x in the box with
// A ⊗ x ≤ b (within tol). Returns the greatest maximiser in the box.
IntPoint brute_primal_integer(const LpInstance& inst, const Box& box,
                              Tolerance tol = {});

// π_i ∈ [⌊L - b_i⌋ - 1, ⌈U - b_i⌉ + 1] with L = cᵀ(A#b) and U = φ(π₀) for
// the feasible integer π₀_i = ⌈L - b_i⌉.
Box dual_search_box(const LpInstance& inst);

// x ∈ [⌊A#b⌋ - 2, ⌊A#b⌋ + 1] componentwise; the top layer is infeasible.
Box primal_search_box(const LpInstance& inst);

}  // namespace tropical::oracle
