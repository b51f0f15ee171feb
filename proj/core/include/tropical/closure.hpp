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
 * @file closure.hpp
 * @brief Digraph quantities of a square max-plus matrix.
 *
 * The digraph D_A has an arc i -> j of weight a_ij for every a_ij > ε.
 * λ(A) is the maximum mean weight over its elementary cycles (ε when D_A is
 * acyclic). The Kleene star A* = I ⊕ A ⊕ A² ⊕ ... is finite-valued exactly
 * when λ(A) ≤ 0 and then equals I ⊕ A ⊕ ... ⊕ A^{n-1}.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "tropical/matrix.hpp"

namespace tropical {

struct Arc {
  std::size_t from;
  std::size_t to;
  Scalar weight;
};

struct Digraph {
  std::size_t nodes = 0;
  std::vector<Arc> arcs;
};

Digraph digraph_of(const Matrix& a);

struct CycleMeanResult {
  Scalar lambda = kEpsilon;
  // Elementary cycle (0-based node sequence, first node not repeated) whose
  // mean is lambda. Empty iff lambda is ε.
  std::optional<std::vector<std::size_t>> witness_cycle;
};

// Maximal strongly connected node sets. Each set is sorted and the sets are
// ordered by their smallest node.
std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& graph);

// λ(A) via Karp's recurrence on every strongly connected component that holds
// at least one arc. Throws DimensionMismatch for non-square input.
CycleMeanResult max_cycle_mean(const Matrix& a);

// Mean weight of a closed walk given as a node sequence; ε if an arc is missing.
Scalar cycle_mean(const Matrix& a, std::span<const std::size_t> cycle);

// A* by a Floyd-Warshall sweep. Throws DivergentStar when λ(A) > tol.
Matrix kleene_star(const Matrix& a, Tolerance tol = {});

// (A_λ)* where A_λ has entries a_ij - lambda. Throws DivergentStar when
// lambda < λ(A) - tol.
Matrix kleene_star_scaled(const Matrix& a, Scalar lambda, Tolerance tol = {});

}  // namespace tropical
