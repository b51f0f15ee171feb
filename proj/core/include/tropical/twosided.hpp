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

/**
 * @file twosided.hpp
 * @brief Two-sided programs solvable through the Kleene star.
 *
 *   (TSLP)   min cᵀ ⊗ y  s.t. A ⊗ y ⊕ d ≤ y
 *   (TSLP2)  min cᵀ ⊗ y  s.t. A ⊗ y ⊕ d = y
 *
 * Both have finite feasible points iff λ(A) ≤ 0. The feasible set of (TSLP)
 * is { A* ⊗ u : A* ⊗ u ≥ d }, which turns it into a dual LP in u with
 * constraint matrix A*ᵀ, right-hand side A*ᵀ ⊗ c and cost d.
 */

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tropical/lp_duality.hpp"

namespace tropical {

struct TwoSidedInstance {
  Matrix a;  // n×n
  Vector d;
  Vector c;

  void validate() const;
};

enum class FeasibilityKind { kFeasible, kInfeasibleLambdaPositive, kUniqueFixedPoint };

std::string_view to_string(FeasibilityKind kind);

struct TwoSidedResult {
  Vector y_opt;
  std::optional<Vector> u_opt;  // (TSLP) only
  Scalar g_min;
  FeasibilityKind feasibility_kind;
  Scalar lambda;  // λ(A)
};

// Throws InfeasibleLambda when λ(A) > tol.
TwoSidedResult solve_tslp(const TwoSidedInstance& inst, Tolerance tol = {});
TwoSidedResult solve_tslp2(const TwoSidedInstance& inst, Tolerance tol = {});

// A ⊗ y ⊕ d ≤ y within tol.
bool tslp_feasible(const TwoSidedInstance& inst, const Vector& y, Tolerance tol = {});
// A ⊗ y ⊕ d = y within tol.
bool tslp2_feasible(const TwoSidedInstance& inst, const Vector& y, Tolerance tol = {});

// max_i ((A ⊗ y ⊕ d)_i - y_i); (TSLP) feasible iff ≤ tol.
Scalar tslp_residual(const TwoSidedInstance& inst, const Vector& y);

// The LP (A*ᵀ, A*ᵀ ⊗ c, d) whose dual is (TSLP) rewritten in u.
LpInstance substituted_dual_instance(const TwoSidedInstance& inst,
                                     const Matrix& star);

// A walk p_0 -> ... -> p_k in D_A. Every feasible y of either program has
// y_{p_0} ≥ a_{p_0 p_1} + ... + a_{p_{k-1} p_k} + d_{p_k}, so
// c_{p_0} + (walk weight) + d_{p_k} bounds the optimum from below.
struct LowerBoundPath {
  std::vector<std::size_t> nodes;
  Scalar bound;
};

// The heaviest such walk (weight cᵀ ⊗ A* ⊗ d). Requires λ(A) ≤ tol.
LowerBoundPath lower_bound_path(const TwoSidedInstance& inst, Tolerance tol = {});

// Recomputes the bound carried by a path; ε if a step is not an arc.
Scalar path_bound(const TwoSidedInstance& inst, const std::vector<std::size_t>& nodes);

}  // namespace tropical
