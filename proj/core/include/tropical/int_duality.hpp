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
 * @file int_duality.hpp
 * @brief Integer versions of the tropical LP pair.
 *
 *   (PI)  max cᵀ ⊗ x   s.t. A ⊗ x ≤ b,   x ∈ ℤⁿ
 *   (DI)  min πᵀ ⊗ b   s.t. πᵀ ⊗ A ≥ cᵀ, π ∈ ℤᵐ
 *
 * (PI) is solved by ⌊A#b⌋. For integer b, (DI) is solved by the constant
 * vector σ = (t,...,t), t = ⌈cᵀ(A#b)⌉, in the substitution σ_i = π_i + b_i.
 * For general b the iterative solver works on the normalised matrix
 * D = diag(b)⁻¹ ⊗ A ⊗ diag(c)⁻¹ and walks each σ_i down a sorted list of
 * candidate values M_ij, all of which share the fractional part of b_i.
 */

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "tropical/lp_duality.hpp"

namespace tropical {

// x - ⌊x⌋, snapped to 0 when x is within tol of an integer.
double fr(double x, Tolerance tol = {});

// Least u ≥ x - tol with fr(u) = phase.
double ceil_frac(double x, double phase, Tolerance tol = {});

// Greatest u ≤ x + tol with fr(u) = phase.
double floor_frac(double x, double phase, Tolerance tol = {});

// ⌊x⌋ and ⌈x⌉ with the same integer snapping as fr.
double floor_snap(double x, Tolerance tol = {});
double ceil_snap(double x, Tolerance tol = {});

bool is_integral(double x, Tolerance tol = {});

struct IntPrimalResult {
  Vector x_opt;
  Scalar f_max_i;
};

enum class IntDualMethod { kDirectIntegerB, kIterative };

std::string_view to_string(IntDualMethod method);

struct IntDualResult {
  Vector pi_opt;
  Scalar phi_min_i;
  std::size_t iterations = 0;
  IntDualMethod method = IntDualMethod::kIterative;
};

// Working state of the iterative (DI) solver.
struct IntDualState {
  Matrix d;                 // diag(b)⁻¹ ⊗ A ⊗ diag(c)⁻¹, m×n
  Matrix m;                 // m×(n+1); column n holds the per-row floors
  Vector sigma;             // current σ, fr(σ_i) = fr(b_i)
  std::vector<std::size_t> active;  // K from the last step, ascending
  Scalar lower_bound;       // L = cᵀ(A#b)
  std::size_t iterations = 0;

  std::size_t row_count() const { return m.rows(); }
  std::size_t column_count() const { return m.cols() - 1; }
  Scalar floor(std::size_t i) const { return m(i, m.cols() - 1); }
};

// Builds D, M and the initial σ_i = max_j M_ij.
IntDualState make_int_dual_state(const LpInstance& inst, Tolerance tol = {});

struct Coverage {
  // sets[i] = N_i(σ) = { j < n : σ_i ≥ M_ij - tol }, ascending.
  std::vector<std::vector<std::size_t>> sets;
  bool covers_all = false;
};

Coverage coverage(const IntDualState& state, const Vector& sigma,
                  Tolerance tol = {});
inline Coverage coverage(const IntDualState& state, Tolerance tol = {}) {
  return coverage(state, state.sigma, tol);
}

IntPrimalResult solve_primal_integer(const LpInstance& inst, Tolerance tol = {});

// Throws NonIntegerB unless every b_i is integral within tol.
IntDualResult solve_dual_integer_direct(const LpInstance& inst,
                                        Tolerance tol = {});

// Called with the state after initialisation and after every accepted step.
using IntDualObserver = std::function<void(const IntDualState&)>;

IntDualResult solve_dual_integer_general(const LpInstance& inst,
                                         Tolerance tol = {},
                                         const IntDualObserver& observer = {});

// Direct solver when b is integral, iterative solver otherwise.
IntDualResult solve_dual_integer(const LpInstance& inst, Tolerance tol = {});

struct GapReport {
  Scalar lower;         // cᵀ⌊A#b⌋
  Scalar real_optimum;  // cᵀ(A#b)
  Scalar upper;         // φ_I^min
};

GapReport duality_gap(const LpInstance& inst, Tolerance tol = {});

struct FloorEstimate {
  Scalar estimate;   // φ_I^min of the instance with b replaced by ⌊b⌋
  Scalar bound = 1;  // |φ_I^min - estimate| never reaches this
};

FloorEstimate estimate_via_floor_b(const LpInstance& inst, Tolerance tol = {});

// A column j whose cheapest cover min_i M_ij equals the optimum. Every
// integer dual-feasible π must cover it, so its cover cost is a lower bound
// on φ_I^min; paired with a witness attaining it this proves optimality.
struct BlockingColumn {
  std::size_t column;
  Scalar cover_cost;
};

BlockingColumn blocking_column(const LpInstance& inst, Tolerance tol = {});

// Cheapest cover cost of column j: min_i (b_i + ⌈c_j - a_ij⌉).
Scalar column_cover_cost(const LpInstance& inst, std::size_t column,
                         Tolerance tol = {});

}  // namespace tropical
