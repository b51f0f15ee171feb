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

#include "tropical/onesided.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tropical/closure.hpp"
#include "tropical/errors.hpp"

namespace tropical {

Vector greatest_subsolution(const Matrix& a, const Vector& b) {
  require_finite(b, "greatest_subsolution: b");
  if (a.rows() != b.size()) {
    throw DimensionMismatch("greatest_subsolution: A has " +
                            std::to_string(a.rows()) + " rows, b has " +
                            std::to_string(b.size()) + " entries");
  }
  // ε entries impose no constraint; a column with no finite entry would be
  // unbounded above.
  Vector x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Scalar best = std::numeric_limits<Scalar>::infinity();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (!is_epsilon(a(i, j))) best = std::min(best, b[i] - a(i, j));
    }
    if (std::isinf(best)) {
      throw EpsilonEntry("greatest_subsolution: column " + std::to_string(j) +
                         " of A has no finite entry");
    }
    x[j] = best;
  }
  return x;
}

OneSidedSolveResult solve_equality(const Matrix& a, const Vector& b,
                                   Tolerance tol) {
  Vector principal = greatest_subsolution(a, b);
  const Vector image = otimes(a, principal);
  Scalar residual = image[0] - b[0];
  bool solvable = true;
  for (std::size_t i = 0; i < b.size(); ++i) {
    residual = std::max(residual, image[i] - b[i]);
    if (!near(image[i], b[i], tol)) solvable = false;
  }
  return {std::move(principal), solvable, residual};
}

bool subeigen_nonempty(const Matrix& a, Scalar lambda, Tolerance tol) {
  require_finite(a, "subeigen_nonempty: A");
  const Scalar own = max_cycle_mean(a).lambda;
  return lambda >= own - tol.abs_tol;
}

Vector subeigen_generate(const Matrix& a, Scalar lambda, const Vector& u,
                         Tolerance tol) {
  require_finite(a, "subeigen_generate: A");
  require_finite(u, "subeigen_generate: u");
  return otimes(kleene_star_scaled(a, lambda, tol), u);
}

bool subeigen_member(const Matrix& a, Scalar lambda, const Vector& x,
                     Tolerance tol) {
  if (!x.is_finite()) return false;
  return leq(otimes(a, x), otimes(lambda, x), tol);
}

}  // namespace tropical
