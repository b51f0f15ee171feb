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

#include "tropical/oracles.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace tropical::oracle {
namespace {

// Visits every lattice point of the box in lexicographic order.
void for_each_point(const Box& box, const std::function<void(const Vector&)>& visit) {
  box.volume();
  const std::size_t dim = box.dimension();
  Vector point(dim);
  for (std::size_t k = 0; k < dim; ++k) point[k] = static_cast<double>(box.lower[k]);
  while (true) {
    visit(point);
    std::size_t k = dim;
    while (k > 0) {
      --k;
      if (point[k] < static_cast<double>(box.upper[k])) {
        point[k] += 1.0;
        break;
      }
      point[k] = static_cast<double>(box.lower[k]);
      if (k == 0) return;
    }
  }
}

// x_j = min_i (b_i - a_ij), written out rather than borrowed from the solvers.
std::vector<double> residuated(const LpInstance& inst) {
  std::vector<double> x(inst.a.cols());
  for (std::size_t j = 0; j < inst.a.cols(); ++j) {
    double best = inst.b[0] - inst.a(0, j);
    for (std::size_t i = 1; i < inst.a.rows(); ++i) {
      best = std::min(best, inst.b[i] - inst.a(i, j));
    }
    x[j] = best;
  }
  return x;
}

}  // namespace

std::uint64_t Box::volume() const {
  if (lower.size() != upper.size() || lower.empty()) {
    throw DimensionMismatch("oracle box: bound vectors must be non-empty and equal length");
  }
  std::uint64_t total = 1;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    if (upper[k] < lower[k]) {
      throw EmptyBox("oracle box: lower bound above upper bound at coordinate " +
                     std::to_string(k));
    }
    const auto width = static_cast<std::uint64_t>(upper[k] - lower[k] + 1);
    if (width > cap || total > cap / width) {
      throw CapExceeded("oracle box exceeds enumeration cap " + std::to_string(cap));
    }
    total *= width;
  }
  return total;
}

Box uniform_box(std::size_t dimension, std::int64_t lower, std::int64_t upper) {
  return Box{std::vector<std::int64_t>(dimension, lower),
             std::vector<std::int64_t>(dimension, upper)};
}

Scalar brute_cycle_mean(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("brute_cycle_mean: matrix must be square");
  const std::size_t n = a.rows();
  if (n > 8) throw CapExceeded("brute_cycle_mean: n must not exceed 8");

  Scalar best = kEpsilon;
  std::vector<std::size_t> path;
  std::vector<bool> on_path(n, false);
  // Each elementary cycle is enumerated once, from its smallest node.
  std::function<void(std::size_t, std::size_t, double)> extend =
      [&](std::size_t root, std::size_t v, double weight) {
        for (std::size_t u = root; u < n; ++u) {
          const Scalar w = a(v, u);
          if (is_epsilon(w)) continue;
          if (u == root) {
            const double mean = (weight + w) / static_cast<double>(path.size());
            if (is_epsilon(best) || mean > best) best = mean;
          } else if (!on_path[u]) {
            on_path[u] = true;
            path.push_back(u);
            extend(root, u, weight + w);
            path.pop_back();
            on_path[u] = false;
          }
        }
      };
  for (std::size_t root = 0; root < n; ++root) {
    path = {root};
    on_path.assign(n, false);
    on_path[root] = true;
    extend(root, root, 0.0);
  }
  return best;
}

Matrix brute_star(const Matrix& a) {
  if (!a.is_square()) throw DimensionMismatch("brute_star: matrix must be square");
  const std::size_t n = a.rows();
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t k = 1; k < n; ++k) {
    power = otimes(power, a);
    sum = oplus(sum, power);
  }
  // Convergence test: one more power must not raise any entry.
  power = otimes(power, a);
  if (!leq(power, sum, Tolerance(1e-9))) {
    throw DivergentStar("brute_star: power series does not stabilise", 0.0);
  }
  return sum;
}

IntPoint brute_dual_integer(const LpInstance& inst, const Box& box, Tolerance tol) {
  inst.validate();
  if (box.dimension() != inst.a.rows()) {
    throw DimensionMismatch("brute_dual_integer: box dimension must equal m");
  }
  bool found = false;
  IntPoint best{Vector(inst.a.rows()), 0.0};
  for_each_point(box, [&](const Vector& pi) {
    for (std::size_t j = 0; j < inst.a.cols(); ++j) {
      double lhs = kEpsilon;
      for (std::size_t i = 0; i < inst.a.rows(); ++i) {
        lhs = std::max(lhs, pi[i] + inst.a(i, j));
      }
      if (lhs < inst.c[j] - tol.abs_tol) return;
    }
    double value = kEpsilon;
    for (std::size_t i = 0; i < inst.a.rows(); ++i) value = std::max(value, pi[i] + inst.b[i]);
    if (!found || value < best.value) {
      found = true;
      best = {pi, value};
    } else if (value == best.value) {
      // Feasibility is upward-closed, so the join of two minimisers is one.
      best.point = oplus(best.point, pi);
    }
  });
  if (!found) throw EmptyBox("brute_dual_integer: no feasible integer point in box");
  return best;
}

IntPoint brute_primal_integer(const LpInstance& inst, const Box& box, Tolerance tol) {
  inst.validate();
  if (box.dimension() != inst.a.cols()) {
    throw DimensionMismatch("brute_primal_integer: box dimension must equal n");
  }
  bool found = false;
  IntPoint best{Vector(inst.a.cols()), 0.0};
  for_each_point(box, [&](const Vector& x) {
    for (std::size_t i = 0; i < inst.a.rows(); ++i) {
      double lhs = kEpsilon;
      for (std::size_t j = 0; j < inst.a.cols(); ++j) lhs = std::max(lhs, inst.a(i, j) + x[j]);
      if (lhs > inst.b[i] + tol.abs_tol) return;
    }
    double value = kEpsilon;
    for (std::size_t j = 0; j < inst.a.cols(); ++j) value = std::max(value, inst.c[j] + x[j]);
    if (!found || value > best.value) {
      found = true;
      best = {x, value};
    } else if (value == best.value) {
      best.point = oplus(best.point, x);
    }
  });
  if (!found) throw EmptyBox("brute_primal_integer: no feasible integer point in box");
  return best;
}

Box dual_search_box(const LpInstance& inst) {
  inst.validate();
  const std::vector<double> x = residuated(inst);
  double lower_bound = kEpsilon;
  for (std::size_t j = 0; j < x.size(); ++j) lower_bound = std::max(lower_bound, inst.c[j] + x[j]);

  const std::size_t m = inst.a.rows();
  double upper_bound = kEpsilon;
  for (std::size_t i = 0; i < m; ++i) {
    upper_bound = std::max(upper_bound, std::ceil(lower_bound - inst.b[i]) + inst.b[i]);
  }
  Box box;
  for (std::size_t i = 0; i < m; ++i) {
    box.lower.push_back(static_cast<std::int64_t>(std::floor(lower_bound - inst.b[i])) - 1);
    box.upper.push_back(static_cast<std::int64_t>(std::ceil(upper_bound - inst.b[i])) + 1);
  }
  return box;
}

Box primal_search_box(const LpInstance& inst) {
  inst.validate();
  Box box;
  for (double v : residuated(inst)) {
    const auto top = static_cast<std::int64_t>(std::floor(v + 1e-9));
    box.lower.push_back(top - 2);
    box.upper.push_back(top + 1);
  }
  return box;
}

}  // namespace tropical::oracle
