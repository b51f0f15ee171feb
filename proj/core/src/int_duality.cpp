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

#include "tropical/int_duality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tropical/errors.hpp"
#include "tropical/onesided.hpp"

namespace tropical {

double fr(double x, Tolerance tol) {
  const double f = x - std::floor(x);
  if (f <= tol.abs_tol || 1.0 - f <= tol.abs_tol) return 0.0;
  return f;
}

double ceil_frac(double x, double phase, Tolerance tol) {
  return std::ceil(x - tol.abs_tol - phase) + phase;
}

double floor_frac(double x, double phase, Tolerance tol) {
  return std::floor(x + tol.abs_tol - phase) + phase;
}

double floor_snap(double x, Tolerance tol) { return std::floor(x + tol.abs_tol); }

double ceil_snap(double x, Tolerance tol) { return std::ceil(x - tol.abs_tol); }

bool is_integral(double x, Tolerance tol) { return fr(x, tol) == 0.0; }

std::string_view to_string(IntDualMethod method) {
  switch (method) {
    case IntDualMethod::kDirectIntegerB:
      return "direct-integer-b";
    case IntDualMethod::kIterative:
      return "iterative";
  }
  return "unknown";
}

namespace {

// Candidate of row i for column j: the least value ≥ b_i - a_ij + c_j sharing
// the fractional part of b_i. Evaluated as b_i + integer so that σ_i - b_i is
// exactly integral.
Scalar candidate(const LpInstance& inst, std::size_t i, std::size_t j,
                 Tolerance tol) {
  return inst.b[i] + ceil_snap(inst.c[j] - inst.a(i, j), tol);
}

Vector integral_pi(const Vector& sigma, const Vector& b) {
  Vector pi(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) pi[i] = std::round(sigma[i] - b[i]);
  return pi;
}

Scalar max_entry(const Vector& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

IntDualState make_int_dual_state(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  const std::size_t rows = inst.a.rows();
  const std::size_t cols = inst.a.cols();
  const Scalar lower = dot(inst.c, greatest_subsolution(inst.a, inst.b));

  Matrix d = otimes(otimes(inverse_diag(inst.b), inst.a), inverse_diag(inst.c));
  Matrix m(rows, cols + 1, kUnit);
  Vector sigma(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = candidate(inst, i, j, tol);
    // Floor: the greatest phase-matching value ≤ L, never above the optimum.
    m(i, cols) = inst.b[i] + floor_snap(lower - inst.b[i], tol);
    const auto row = m.row(i);
    sigma[i] = *std::max_element(row.begin(), row.end());
  }
  return IntDualState{std::move(d), std::move(m), std::move(sigma), {}, lower, 0};
}

Coverage coverage(const IntDualState& state, const Vector& sigma, Tolerance tol) {
  const std::size_t cols = state.column_count();
  Coverage out;
  out.sets.resize(state.row_count());
  std::vector<bool> covered(cols, false);
  for (std::size_t i = 0; i < state.row_count(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (sigma[i] >= state.m(i, j) - tol.abs_tol) {
        out.sets[i].push_back(j);
        covered[j] = true;
      }
    }
  }
  out.covers_all = std::all_of(covered.begin(), covered.end(), [](bool v) { return v; });
  return out;
}

IntPrimalResult solve_primal_integer(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  Vector x = greatest_subsolution(inst.a, inst.b);
  for (auto& v : x) v = floor_snap(v, tol);
  const Scalar f = dot(inst.c, x);
  return {std::move(x), f};
}

IntDualResult solve_dual_integer_direct(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    if (!is_integral(inst.b[i], tol)) {
      throw NonIntegerB("solve_dual_integer_direct: b[" + std::to_string(i) +
                        "] = " + std::to_string(inst.b[i]) + " is not an integer");
    }
  }
  const Scalar t = ceil_snap(dot(inst.c, greatest_subsolution(inst.a, inst.b)), tol);
  Vector pi = otimes(t, conjugate(inst.b));
  for (auto& v : pi) v = std::round(v);
  const Scalar phi = dot(pi, inst.b);
  return {std::move(pi), phi, 0, IntDualMethod::kDirectIntegerB};
}

IntDualResult solve_dual_integer_general(const LpInstance& inst, Tolerance tol,
                                         const IntDualObserver& observer) {
  IntDualState state = make_int_dual_state(inst, tol);
  const std::size_t rows = state.row_count();

  // Per-row candidates in descending order, duplicates collapsed. σ_i always
  // sits at ladder[i][rung[i]].
  std::vector<std::vector<Scalar>> ladder(rows);
  std::vector<std::size_t> rung(rows, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto row = state.m.row(i);
    ladder[i].assign(row.begin(), row.end());
    std::sort(ladder[i].begin(), ladder[i].end(), std::greater<>());
    ladder[i].erase(std::unique(ladder[i].begin(), ladder[i].end(),
                                [&](Scalar x, Scalar y) { return near(x, y, tol); }),
                    ladder[i].end());
  }

  if (observer) observer(state);
  while (true) {
    const Scalar objective = max_entry(state.sigma);
    state.active.clear();
    for (std::size_t i = 0; i < rows; ++i) {
      if (state.sigma[i] >= objective - tol.abs_tol &&
          state.sigma[i] > state.floor(i) + tol.abs_tol) {
        state.active.push_back(i);
      }
    }
    if (state.active.empty()) break;

    Vector lowered = state.sigma;
    for (std::size_t i : state.active) lowered[i] = ladder[i][rung[i] + 1];
    if (!coverage(state, lowered, tol).covers_all) break;

    for (std::size_t i : state.active) ++rung[i];
    state.sigma = std::move(lowered);
    ++state.iterations;
    if (observer) observer(state);
  }

  Vector pi = integral_pi(state.sigma, inst.b);
  const Scalar phi = dot(pi, inst.b);
  return {std::move(pi), phi, state.iterations, IntDualMethod::kIterative};
}

IntDualResult solve_dual_integer(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  const bool integral_b = std::all_of(inst.b.begin(), inst.b.end(),
                                      [&](Scalar v) { return is_integral(v, tol); });
  return integral_b ? solve_dual_integer_direct(inst, tol)
                    : solve_dual_integer_general(inst, tol);
}

GapReport duality_gap(const LpInstance& inst, Tolerance tol) {
  const IntPrimalResult primal = solve_primal_integer(inst, tol);
  const Scalar real = dot(inst.c, greatest_subsolution(inst.a, inst.b));
  const IntDualResult dual = solve_dual_integer(inst, tol);
  return {primal.f_max_i, real, dual.phi_min_i};
}

FloorEstimate estimate_via_floor_b(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  LpInstance floored = inst;
  for (auto& v : floored.b) v = floor_snap(v, tol);
  return {solve_dual_integer_direct(floored, tol).phi_min_i, 1.0};
}

Scalar column_cover_cost(const LpInstance& inst, std::size_t column, Tolerance tol) {
  Scalar best = candidate(inst, 0, column, tol);
  for (std::size_t i = 1; i < inst.a.rows(); ++i) {
    best = std::min(best, candidate(inst, i, column, tol));
  }
  return best;
}

BlockingColumn blocking_column(const LpInstance& inst, Tolerance tol) {
  inst.validate();
  BlockingColumn out{0, column_cover_cost(inst, 0, tol)};
  for (std::size_t j = 1; j < inst.a.cols(); ++j) {
    const Scalar cost = column_cover_cost(inst, j, tol);
    if (cost > out.cover_cost) out = {j, cost};
  }
  return out;
}

}  // namespace tropical
