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

#include "tropical/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

void check_value(Scalar v) {
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
    throw Error("tropical scalar must be finite or ε (got NaN or +inf)");
  }
}

std::string shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a.rows(), a.cols()) +
                            " vs " + shape(b.rows(), b.cols()));
  }
}

void require_inner(std::size_t lhs_cols, std::size_t rhs_rows, const char* op) {
  if (lhs_cols != rhs_rows) {
    throw DimensionMismatch(std::string(op) + ": inner dimensions " +
                            std::to_string(lhs_cols) + " and " +
                            std::to_string(rhs_rows) + " differ");
  }
}

void require_same_size(const Vector& a, const Vector& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionMismatch(std::string(op) + ": lengths " +
                            std::to_string(a.size()) + " and " +
                            std::to_string(b.size()) + " differ");
  }
}

void append_scalar(std::ostringstream& out, Scalar v) {
  if (is_epsilon(v)) {
    out << "-inf";
  } else {
    out << v;
  }
}

}  // namespace

Vector::Vector(std::size_t n, Scalar fill) : data_(n, fill) {
  if (n == 0) throw DimensionMismatch("vector length must be positive");
  check_value(fill);
}

Vector::Vector(std::initializer_list<Scalar> values) : data_(values) {
  if (data_.empty()) throw DimensionMismatch("vector length must be positive");
  std::for_each(data_.begin(), data_.end(), check_value);
}

Vector::Vector(std::vector<Scalar> values) : data_(std::move(values)) {
  if (data_.empty()) throw DimensionMismatch("vector length must be positive");
  std::for_each(data_.begin(), data_.end(), check_value);
}

bool Vector::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Scalar v) { return !is_epsilon(v); });
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Scalar fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {
  if (rows == 0 || cols == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  check_value(fill);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    for (Scalar v : r) {
      check_value(v);
      data_.push_back(v);
    }
  }
}

Matrix::Matrix(const std::vector<std::vector<Scalar>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionMismatch("matrix dimensions must be positive");
  }
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix rows");
    for (Scalar v : r) {
      check_value(v);
      data_.push_back(v);
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n, kEpsilon);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = kUnit;
  return out;
}

Matrix Matrix::epsilon(std::size_t rows, std::size_t cols) {
  return Matrix(rows, cols, kEpsilon);
}

Matrix Matrix::column(const Vector& v) {
  Matrix out(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) out(i, 0) = v[i];
  return out;
}

bool Matrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](Scalar v) { return !is_epsilon(v); });
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::shifted(Scalar shift) const {
  Matrix out = *this;
  for (auto& v : out.data_) v = otimes(v, shift);
  return out;
}

Matrix oplus(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "oplus");
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) = oplus(a(i, j), b(i, j));
    }
  }
  return out;
}

Vector oplus(const Vector& a, const Vector& b) {
  require_same_size(a, b, "oplus");
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = oplus(a[i], b[i]);
  return out;
}

Matrix otimes(const Matrix& a, const Matrix& b) {
  require_inner(a.cols(), b.rows(), "otimes");
  Matrix out(a.rows(), b.cols(), kEpsilon);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar aik = a(i, k);
      if (is_epsilon(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        out(i, j) = oplus(out(i, j), otimes(aik, b(k, j)));
      }
    }
  }
  return out;
}

Vector otimes(const Matrix& a, const Vector& x) {
  require_inner(a.cols(), x.size(), "otimes");
  Vector out(a.rows(), kEpsilon);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = kEpsilon;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      acc = oplus(acc, otimes(a(i, j), x[j]));
    }
    out[i] = acc;
  }
  return out;
}

Vector otimes(const Vector& x, const Matrix& a) {
  require_inner(x.size(), a.rows(), "otimes");
  Vector out(a.cols(), kEpsilon);
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar acc = kEpsilon;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      acc = oplus(acc, otimes(x[i], a(i, j)));
    }
    out[j] = acc;
  }
  return out;
}

Vector otimes(Scalar s, const Vector& x) {
  Vector out = x;
  for (auto& v : out) v = otimes(s, v);
  return out;
}

Matrix otimes_min(const Matrix& a, const Matrix& b) {
  require_inner(a.cols(), b.rows(), "otimes_min");
  require_finite(a, "otimes_min lhs");
  require_finite(b, "otimes_min rhs");
  Matrix out(a.rows(), b.cols(), kUnit);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = a(i, 0) + b(0, j);
      for (std::size_t k = 1; k < a.cols(); ++k) {
        acc = std::min(acc, a(i, k) + b(k, j));
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Vector otimes_min(const Matrix& a, const Vector& x) {
  require_inner(a.cols(), x.size(), "otimes_min");
  require_finite(a, "otimes_min lhs");
  require_finite(x, "otimes_min rhs");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Scalar acc = a(i, 0) + x[0];
    for (std::size_t j = 1; j < a.cols(); ++j) acc = std::min(acc, a(i, j) + x[j]);
    out[i] = acc;
  }
  return out;
}

Vector otimes_min(const Vector& x, const Matrix& a) {
  require_inner(x.size(), a.rows(), "otimes_min");
  require_finite(x, "otimes_min lhs");
  require_finite(a, "otimes_min rhs");
  Vector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar acc = x[0] + a(0, j);
    for (std::size_t i = 1; i < a.rows(); ++i) acc = std::min(acc, x[i] + a(i, j));
    out[j] = acc;
  }
  return out;
}

Scalar dot(const Vector& c, const Vector& x) {
  require_same_size(c, x, "dot");
  Scalar acc = kEpsilon;
  for (std::size_t j = 0; j < c.size(); ++j) acc = oplus(acc, otimes(c[j], x[j]));
  return acc;
}

Scalar dot_min(const Vector& c, const Vector& x) {
  require_same_size(c, x, "dot_min");
  require_finite(c, "dot_min lhs");
  require_finite(x, "dot_min rhs");
  Scalar acc = c[0] + x[0];
  for (std::size_t j = 1; j < c.size(); ++j) acc = std::min(acc, c[j] + x[j]);
  return acc;
}

Matrix conjugate(const Matrix& a) {
  require_finite(a, "conjugate");
  Matrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = -a(i, j);
  }
  return out;
}

Vector conjugate(const Vector& x) {
  require_finite(x, "conjugate");
  Vector out = x;
  for (auto& v : out) v = -v;
  return out;
}

Matrix diag(const Vector& x) {
  require_finite(x, "diag");
  Matrix out = Matrix::epsilon(x.size(), x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out(i, i) = x[i];
  return out;
}

Matrix inverse_diag(const Vector& x) { return diag(conjugate(x)); }

bool leq(const Matrix& a, const Matrix& b, Tolerance tol) {
  require_same_shape(a, b, "leq");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!leq(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

bool leq(const Vector& a, const Vector& b, Tolerance tol) {
  require_same_size(a, b, "leq");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!leq(a[i], b[i], tol)) return false;
  }
  return true;
}

bool near(const Matrix& a, const Matrix& b, Tolerance tol) {
  require_same_shape(a, b, "near");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!near(a(i, j), b(i, j), tol)) return false;
    }
  }
  return true;
}

bool near(const Vector& a, const Vector& b, Tolerance tol) {
  require_same_size(a, b, "near");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!near(a[i], b[i], tol)) return false;
  }
  return true;
}

void require_finite(const Matrix& a, const char* what) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (is_epsilon(a(i, j))) {
        throw EpsilonEntry(std::string(what) + ": ε entry at (" +
                           std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

void require_finite(const Vector& x, const char* what) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (is_epsilon(x[i])) {
      throw EpsilonEntry(std::string(what) + ": ε entry at index " +
                         std::to_string(i));
    }
  }
}

std::string to_string(const Matrix& a) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < a.rows(); ++i) {
    out << (i ? ", [" : "[");
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ", ";
      append_scalar(out, a(i, j));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

std::string to_string(const Vector& x) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out << ", ";
    append_scalar(out, x[i]);
  }
  out << ')';
  return out.str();
}

}  // namespace tropical
