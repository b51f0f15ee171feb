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

#include "tropical/twosided.hpp"

#include <string>

#include "tropical/closure.hpp"
#include "tropical/errors.hpp"

namespace tropical {
namespace {

Scalar checked_lambda(const TwoSidedInstance& inst, Tolerance tol, const char* op) {
  inst.validate();
  const Scalar lambda = max_cycle_mean(inst.a).lambda;
  if (!is_epsilon(lambda) && lambda > tol.abs_tol) {
    throw InfeasibleLambda(std::string(op) + ": λ(A) = " + std::to_string(lambda) +
                               " > 0, no finite feasible point",
                           lambda);
  }
  return lambda;
}

Matrix negated(const Matrix& a) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
  }
  return out;
}

}  // namespace

void TwoSidedInstance::validate() const {
  if (!a.is_square()) {
    throw DimensionMismatch("two-sided instance: A must be square, got " +
                            std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (d.size() != a.rows() || c.size() != a.rows()) {
    throw DimensionMismatch("two-sided instance: c and d must have length " +
                            std::to_string(a.rows()));
  }
  require_finite(a, "two-sided instance A");
  require_finite(d, "two-sided instance d");
  require_finite(c, "two-sided instance c");
}

std::string_view to_string(FeasibilityKind kind) {
  switch (kind) {
    case FeasibilityKind::kFeasible:
      return "feasible";
    case FeasibilityKind::kInfeasibleLambdaPositive:
      return "infeasible-lambda-positive";
    case FeasibilityKind::kUniqueFixedPoint:
      return "unique-fixed-point";
  }
  return "unknown";
}

TwoSidedResult solve_tslp(const TwoSidedInstance& inst, Tolerance tol) {
  const Scalar lambda = checked_lambda(inst, tol, "solve_tslp");
  const Matrix star = kleene_star(inst.a, tol);
  const Matrix minus_star = negated(star);

  // w = A*ᵀ ⊗ c is the right-hand side of the LP in u.
  const Vector w = otimes(star.transpose(), inst.c);
  const Scalar g_min = dot(inst.d, otimes_min(minus_star, w));
  // ūᵀ = g_min ⊗ (c# ⊗′ (-A*))
  Vector u = otimes(g_min, otimes_min(conjugate(inst.c), minus_star));
  Vector y = otimes(star, u);

  if (!tslp_feasible(inst, y, tol) || !near(dot(inst.c, y), g_min, tol)) {
    throw CertificateViolation("solve_tslp: closed-form witness is not feasible");
  }
  return {std::move(y), std::move(u), g_min, FeasibilityKind::kFeasible, lambda};
}

TwoSidedResult solve_tslp2(const TwoSidedInstance& inst, Tolerance tol) {
  const Scalar lambda = checked_lambda(inst, tol, "solve_tslp2");
  const Matrix star = kleene_star(inst.a, tol);
  Vector y = otimes(star, inst.d);
  const Scalar g_min = dot(inst.c, y);
  const FeasibilityKind kind = (is_epsilon(lambda) || lambda < -tol.abs_tol)
                                   ? FeasibilityKind::kUniqueFixedPoint
                                   : FeasibilityKind::kFeasible;
  if (!tslp2_feasible(inst, y, tol)) {
    throw CertificateViolation("solve_tslp2: A* ⊗ d violates the equation");
  }
  return {std::move(y), std::nullopt, g_min, kind, lambda};
}

Scalar tslp_residual(const TwoSidedInstance& inst, const Vector& y) {
  const Vector lhs = oplus(otimes(inst.a, y), inst.d);
  Scalar worst = lhs[0] - y[0];
  for (std::size_t i = 1; i < y.size(); ++i) worst = std::max(worst, lhs[i] - y[i]);
  return worst;
}

bool tslp_feasible(const TwoSidedInstance& inst, const Vector& y, Tolerance tol) {
  if (!y.is_finite() || y.size() != inst.a.rows()) return false;
  return tslp_residual(inst, y) <= tol.abs_tol;
}

bool tslp2_feasible(const TwoSidedInstance& inst, const Vector& y, Tolerance tol) {
  if (!y.is_finite() || y.size() != inst.a.rows()) return false;
  return near(oplus(otimes(inst.a, y), inst.d), y, tol);
}

LpInstance substituted_dual_instance(const TwoSidedInstance& inst, const Matrix& star) {
  Matrix star_t = star.transpose();
  Vector rhs = otimes(star_t, inst.c);
  return {std::move(star_t), std::move(rhs), inst.d};
}

LowerBoundPath lower_bound_path(const TwoSidedInstance& inst, Tolerance tol) {
  checked_lambda(inst, tol, "lower_bound_path");
  const std::size_t n = inst.a.rows();
  constexpr std::size_t kStop = static_cast<std::size_t>(-1);

  // best[t][l]: heaviest a-walk of at most t arcs from l, ending in some d_k.
  std::vector<std::vector<Scalar>> best(n, std::vector<Scalar>(n));
  std::vector<std::vector<std::size_t>> next(n, std::vector<std::size_t>(n, kStop));
  for (std::size_t l = 0; l < n; ++l) best[0][l] = inst.d[l];
  for (std::size_t t = 1; t < n; ++t) {
    for (std::size_t l = 0; l < n; ++l) {
      best[t][l] = inst.d[l];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar w = inst.a(l, k) + best[t - 1][k];
        if (w > best[t][l]) {
          best[t][l] = w;
          next[t][l] = k;
        }
      }
    }
  }

  std::size_t start = 0;
  for (std::size_t l = 1; l < n; ++l) {
    if (inst.c[l] + best[n - 1][l] > inst.c[start] + best[n - 1][start]) start = l;
  }
  LowerBoundPath path{{start}, inst.c[start] + best[n - 1][start]};
  std::size_t node = start;
  for (std::size_t t = n - 1; t > 0 && next[t][node] != kStop; --t) {
    node = next[t][node];
    path.nodes.push_back(node);
  }
  return path;
}

Scalar path_bound(const TwoSidedInstance& inst, const std::vector<std::size_t>& nodes) {
  if (nodes.empty()) return kEpsilon;
  for (std::size_t v : nodes) {
    if (v >= inst.a.rows()) return kEpsilon;
  }
  Scalar total = inst.c[nodes.front()];
  for (std::size_t p = 0; p + 1 < nodes.size(); ++p) {
    total = otimes(total, inst.a(nodes[p], nodes[p + 1]));
  }
  return otimes(total, inst.d[nodes.back()]);
}

}  // namespace tropical
