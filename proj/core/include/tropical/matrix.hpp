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
 * @file matrix.hpp
 * @brief Dense max-plus / min-plus matrices and vectors.
 *
 * ⊕ is max and ⊗ is + over ℝ ∪ {ε}. The dual pair ⊕′ = min, ⊗′ = + is only
 * defined over ℝ, so every min-plus entry point rejects ε operands.
 * Conjugation A# = -Aᵀ links the two algebras.
 */

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tropical/scalar.hpp"

namespace tropical {

class Vector {
 public:
  // A length-n vector filled with `fill`. n must be positive.
  explicit Vector(std::size_t n, Scalar fill = kUnit);
  Vector(std::initializer_list<Scalar> values);
  explicit Vector(std::vector<Scalar> values);

  std::size_t size() const noexcept { return data_.size(); }

  Scalar& operator[](std::size_t i) { return data_[i]; }
  Scalar operator[](std::size_t i) const { return data_[i]; }

  auto begin() noexcept { return data_.begin(); }
  auto end() noexcept { return data_.end(); }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  std::span<const Scalar> values() const noexcept { return data_; }

  bool is_finite() const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Scalar> data_;
};

class Matrix {
 public:
  // An m×n matrix filled with `fill` (ε by default). m, n must be positive.
  Matrix(std::size_t rows, std::size_t cols, Scalar fill = kEpsilon);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);
  explicit Matrix(const std::vector<std::vector<Scalar>>& rows);

  static Matrix identity(std::size_t n);
  static Matrix epsilon(std::size_t rows, std::size_t cols);
  // Column vector view of v as an n×1 matrix.
  static Matrix column(const Vector& v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Scalar operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const Scalar> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  // True iff no entry is ε.
  bool is_finite() const;

  Matrix transpose() const;

  // Entrywise a_ij + shift (ε stays ε).
  Matrix shifted(Scalar shift) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

// A ⊕ B
Matrix oplus(const Matrix& a, const Matrix& b);
Vector oplus(const Vector& a, const Vector& b);

// A ⊗ B, A ⊗ x
Matrix otimes(const Matrix& a, const Matrix& b);
Vector otimes(const Matrix& a, const Vector& x);
// xᵀ ⊗ A as a row vector.
Vector otimes(const Vector& x, const Matrix& a);
// Scalar ⊗ vector.
Vector otimes(Scalar s, const Vector& x);

// A ⊗′ B, A ⊗′ x. All operands must be finite.
Matrix otimes_min(const Matrix& a, const Matrix& b);
Vector otimes_min(const Matrix& a, const Vector& x);
Vector otimes_min(const Vector& x, const Matrix& a);

// cᵀ ⊗ x = max_j (c_j + x_j).
Scalar dot(const Vector& c, const Vector& x);
// cᵀ ⊗′ x = min_j (c_j + x_j). Operands must be finite.
Scalar dot_min(const Vector& c, const Vector& x);

// A# = -Aᵀ. A must be finite.
Matrix conjugate(const Matrix& a);
// x# as the negated vector (read as a row). x must be finite.
Vector conjugate(const Vector& x);

// diag(x): x on the diagonal, ε elsewhere. x must be finite.
Matrix diag(const Vector& x);
// diag(x)⁻¹ = diag(-x).
Matrix inverse_diag(const Vector& x);

// a_ij ≤ b_ij + tol entrywise, ε ≤ anything.
bool leq(const Matrix& a, const Matrix& b, Tolerance tol = {});
bool leq(const Vector& a, const Vector& b, Tolerance tol = {});

// Entrywise equality within tol; ε only equals ε.
bool near(const Matrix& a, const Matrix& b, Tolerance tol = {});
bool near(const Vector& a, const Vector& b, Tolerance tol = {});

// Throw EpsilonEntry naming `what` unless every entry is finite.
void require_finite(const Matrix& a, const char* what);
void require_finite(const Vector& x, const char* what);

std::string to_string(const Matrix& a);
std::string to_string(const Vector& x);

}  // namespace tropical
