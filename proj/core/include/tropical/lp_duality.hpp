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
 * @file lp_duality.hpp
 * @brief The tropical LP pair
 *
 *   (P)  max cᵀ ⊗ x   s.t. A ⊗ x ≤ b,   x ∈ ℝⁿ
 *   (D)  min πᵀ ⊗ b   s.t. πᵀ ⊗ A ≥ cᵀ, π ∈ ℝᵐ
 *
 * Both optima exist and coincide for every finite (A, b, c). The canonical
 * witnesses are x̄ = A# ⊗′ b and π̄ᵀ = (cᵀ ⊗ x̄) ⊗ b#.
 */

#include "tropical/matrix.hpp"

namespace tropical {

struct LpInstance {
  Matrix a;
  Vector b;
  Vector c;

  // Throws DimensionMismatch or EpsilonEntry unless the triple is finite and
  // shaped m×n, m, n.
  void validate() const;
};

struct PrimalSolution {
  Vector x;
  Scalar objective;
};

struct DualSolution {
  Vector pi;
  Scalar objective;
};

struct DualityCertificate {
  Vector x_opt;
  Vector pi_opt;
  Scalar f_max;
  Scalar phi_min;
};

PrimalSolution solve_primal(const LpInstance& inst);
DualSolution solve_dual(const LpInstance& inst);

// Solves both sides and checks feasibility plus |f_max - phi_min| ≤ tol.
// Throws CertificateViolation if that fails.
DualityCertificate certify(const LpInstance& inst, Tolerance tol = {});

// max_i ((A ⊗ x)_i - b_i). Feasible iff ≤ tol.
Scalar primal_residual(const LpInstance& inst, const Vector& x);
// max_j (c_j - (πᵀ ⊗ A)_j). Feasible iff ≤ tol.
Scalar dual_residual(const LpInstance& inst, const Vector& pi);

bool primal_feasible(const LpInstance& inst, const Vector& x, Tolerance tol = {});
bool dual_feasible(const LpInstance& inst, const Vector& pi, Tolerance tol = {});

// Re-checks a certificate against the instance without re-solving: both
// witnesses feasible, stated values reproduced, no gap. By weak duality this
// proves both witnesses optimal.
bool verify(const LpInstance& inst, const DualityCertificate& cert,
            Tolerance tol = {});

}  // namespace tropical
