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

// One-sided systems A ⊗ x ≤ b, A ⊗ x = b and subeigenvectors A ⊗ x ≤ λ ⊗ x.
//
// Everything here rests on residuation: A ⊗ x ≤ y iff x ≤ A# ⊗′ y, so
// A# ⊗′ b is the greatest subsolution. The subeigenvector functions need a
// finite A.

#include "tropical/matrix.hpp"

namespace tropical {

struct OneSidedSolveResult {
  Vector principal;  // A# ⊗′ b
  bool solvable_as_equality = false;
  // max_i ((A ⊗ principal)_i - b_i); never positive beyond rounding.
  Scalar residual = 0.0;
};

// x̂ = A# ⊗′ b, x̂_j = min_i (b_i - a_ij) over the finite a_ij. b must be
// finite and every column of A must hold a finite entry.
Vector greatest_subsolution(const Matrix& a, const Vector& b);

OneSidedSolveResult solve_equality(const Matrix& a, const Vector& b,
                                   Tolerance tol = {});

bool subeigen_nonempty(const Matrix& a, Scalar lambda, Tolerance tol = {});

// A_λ* ⊗ u. Throws DivergentStar if lambda < λ(A) - tol.
Vector subeigen_generate(const Matrix& a, Scalar lambda, const Vector& u,
                         Tolerance tol = {});

bool subeigen_member(const Matrix& a, Scalar lambda, const Vector& x,
                     Tolerance tol = {});

}  // namespace tropical
