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

#include "tropical/closure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tropical/errors.hpp"

namespace tropical {
namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) {
    throw DimensionMismatch(std::string(op) + ": matrix must be square, got " +
                            std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()));
  }
}

// Relative slack used when checking that a recovered cycle attains λ.
bool mean_matches(Scalar mean, Scalar lambda) {
  return std::abs(mean - lambda) <= 1e-9 * std::max(1.0, std::abs(lambda));
}

// Splits a closed-or-open walk into the elementary cycles it traverses and
// returns the one with the largest mean.
std::optional<std::vector<std::size_t>> best_cycle_on_walk(
    const Matrix& a, const std::vector<std::size_t>& walk) {
  std::vector<std::size_t> stack;
  std::vector<std::ptrdiff_t> position(a.rows(), -1);
  std::optional<std::vector<std::size_t>> best;
  Scalar best_mean = kEpsilon;
  for (std::size_t node : walk) {
    if (position[node] >= 0) {
      const auto start = static_cast<std::size_t>(position[node]);
      std::vector<std::size_t> cycle(stack.begin() + start, stack.end());
      const Scalar mean = cycle_mean(a, cycle);
      if (!best || mean > best_mean) {
        best_mean = mean;
        best = cycle;
      }
      for (std::size_t k = start + 1; k < stack.size(); ++k) position[stack[k]] = -1;
      stack.resize(start + 1);
      continue;
    }
    position[node] = static_cast<std::ptrdiff_t>(stack.size());
    stack.push_back(node);
  }
  return best;
}

// Recovers a cycle of mean lambda inside `nodes` from the critical digraph of
// A - lambda: starting at the node with the heaviest closed walk, always step
// along the arc that keeps the best return path to the start. The first
// repeated node closes a zero-weight cycle of A - lambda.
std::vector<std::size_t> critical_cycle(const Matrix& a,
                                        const std::vector<std::size_t>& nodes,
                                        Scalar lambda) {
  const std::size_t k = nodes.size();
  Matrix plus(k, k, kEpsilon);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      plus(i, j) = otimes(a(nodes[i], nodes[j]), -lambda);
    }
  }
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      if (is_epsilon(plus(i, m))) continue;
      for (std::size_t j = 0; j < k; ++j) {
        plus(i, j) = oplus(plus(i, j), otimes(plus(i, m), plus(m, j)));
      }
    }
  }
  std::size_t start = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (plus(i, i) > plus(start, start)) start = i;
  }
  auto return_weight = [&](std::size_t u) {
    return u == start ? kUnit : plus(u, start);
  };
  std::vector<std::ptrdiff_t> position(k, -1);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (position[v] < 0) {
    position[v] = static_cast<std::ptrdiff_t>(walk.size());
    walk.push_back(v);
    std::size_t next = k;
    Scalar best = kEpsilon;
    for (std::size_t u = 0; u < k; ++u) {
      const Scalar w = otimes(otimes(a(nodes[v], nodes[u]), -lambda), return_weight(u));
      if (next == k || w > best) {
        best = w;
        next = u;
      }
    }
    v = next;
  }
  std::vector<std::size_t> cycle;
  for (auto p = static_cast<std::size_t>(position[v]); p < walk.size(); ++p) {
    cycle.push_back(nodes[walk[p]]);
  }
  return cycle;
}

// Karp's recurrence on one strongly connected component.
CycleMeanResult karp_component(const Matrix& a,
                               const std::vector<std::size_t>& nodes) {
  const std::size_t k = nodes.size();
  // walk[len][v]: heaviest walk of exactly len arcs from nodes[0] to nodes[v].
  std::vector<std::vector<Scalar>> walk(k + 1, std::vector<Scalar>(k, kEpsilon));
  std::vector<std::vector<std::size_t>> pred(k + 1, std::vector<std::size_t>(k, 0));
  walk[0][0] = kUnit;
  for (std::size_t len = 1; len <= k; ++len) {
    for (std::size_t v = 0; v < k; ++v) {
      for (std::size_t u = 0; u < k; ++u) {
        const Scalar w = otimes(walk[len - 1][u], a(nodes[u], nodes[v]));
        if (w > walk[len][v]) {
          walk[len][v] = w;
          pred[len][v] = u;
        }
      }
    }
  }

  CycleMeanResult result;
  std::size_t arg = k;
  for (std::size_t v = 0; v < k; ++v) {
    if (is_epsilon(walk[k][v])) continue;
    Scalar worst = std::numeric_limits<double>::infinity();
    for (std::size_t len = 0; len < k; ++len) {
      if (is_epsilon(walk[len][v])) continue;
      worst = std::min(worst, (walk[k][v] - walk[len][v]) /
                                  static_cast<double>(k - len));
    }
    if (arg == k || worst > result.lambda) {
      result.lambda = worst;
      arg = v;
    }
  }
  if (arg == k) return result;

  std::vector<std::size_t> trace(k + 1);
  std::size_t v = arg;
  for (std::size_t len = k + 1; len-- > 0;) {
    trace[len] = nodes[v];
    if (len > 0) v = pred[len][v];
  }
  auto cycle = best_cycle_on_walk(a, trace);
  if (!cycle || !mean_matches(cycle_mean(a, *cycle), result.lambda)) {
    cycle = critical_cycle(a, nodes, result.lambda);
  }
  result.witness_cycle = std::move(cycle);
  return result;
}

// I ⊕ A⁺ where A⁺ comes from the algebraic Floyd-Warshall sweep. Assumes no
// positive cycles beyond rounding noise.
Matrix floyd_warshall_star(const Matrix& a) {
  const std::size_t n = a.rows();
  Matrix star = a;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Scalar sik = star(i, k);
      if (is_epsilon(sik)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        star(i, j) = oplus(star(i, j), otimes(sik, star(k, j)));
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) star(i, i) = oplus(star(i, i), kUnit);
  return star;
}

}  // namespace

Digraph digraph_of(const Matrix& a) {
  require_square(a, "digraph_of");
  Digraph graph;
  graph.nodes = a.rows();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!is_epsilon(a(i, j))) graph.arcs.push_back({i, j, a(i, j)});
    }
  }
  return graph;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(
    const Digraph& graph) {
  const std::size_t n = graph.nodes;
  std::vector<std::vector<std::size_t>> out_adj(n), in_adj(n);
  for (const Arc& arc : graph.arcs) {
    out_adj[arc.from].push_back(arc.to);
    in_adj[arc.to].push_back(arc.from);
  }

  // Kosaraju: finishing order on the graph, then sweeps on the reverse.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<bool> seen(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < out_adj[v].size()) {
        const std::size_t u = out_adj[v][next++];
        if (!seen[u]) {
          seen[u] = true;
          stack.emplace_back(u, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<std::size_t>> components;
  std::vector<bool> assigned(n, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    std::vector<std::size_t> component;
    std::vector<std::size_t> stack{*it};
    assigned[*it] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (std::size_t u : in_adj[v]) {
        if (!assigned[u]) {
          assigned[u] = true;
          stack.push_back(u);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  std::sort(components.begin(), components.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  return components;
}

Scalar cycle_mean(const Matrix& a, std::span<const std::size_t> cycle) {
  if (cycle.empty()) return kEpsilon;
  Scalar total = kUnit;
  for (std::size_t p = 0; p < cycle.size(); ++p) {
    total = otimes(total, a(cycle[p], cycle[(p + 1) % cycle.size()]));
  }
  if (is_epsilon(total)) return kEpsilon;
  return total / static_cast<double>(cycle.size());
}

CycleMeanResult max_cycle_mean(const Matrix& a) {
  require_square(a, "max_cycle_mean");
  CycleMeanResult best;
  for (const auto& component : strongly_connected_components(digraph_of(a))) {
    if (component.size() == 1 && is_epsilon(a(component[0], component[0]))) {
      continue;
    }
    CycleMeanResult local = karp_component(a, component);
    if (!best.witness_cycle || local.lambda > best.lambda) best = std::move(local);
  }
  return best;
}

Matrix kleene_star(const Matrix& a, Tolerance tol) {
  require_square(a, "kleene_star");
  const Scalar lambda = max_cycle_mean(a).lambda;
  if (!is_epsilon(lambda) && lambda > tol.abs_tol) {
    throw DivergentStar("kleene_star: λ(A) = " + std::to_string(lambda) +
                            " > 0, series diverges",
                        lambda);
  }
  return floyd_warshall_star(a);
}

Matrix kleene_star_scaled(const Matrix& a, Scalar lambda, Tolerance tol) {
  require_square(a, "kleene_star_scaled");
  if (!std::isfinite(lambda)) {
    throw EpsilonEntry("kleene_star_scaled: lambda must be finite");
  }
  const Scalar own = max_cycle_mean(a).lambda;
  if (!is_epsilon(own) && lambda < own - tol.abs_tol) {
    throw DivergentStar("kleene_star_scaled: lambda " + std::to_string(lambda) +
                            " below λ(A) = " + std::to_string(own),
                        own);
  }
  return floyd_warshall_star(a.shifted(-lambda));
}

}  // namespace tropical
