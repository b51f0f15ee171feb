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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria (0 when all pass).

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "golden.hpp"
#include "tropical/closure.hpp"
#include "tropical/int_duality.hpp"
#include "tropical/io.hpp"
#include "tropical/lp_duality.hpp"
#include "tropical/onesided.hpp"
#include "tropical/oracles.hpp"
#include "tropical/twosided.hpp"

namespace {

using namespace tropical;
using tropical::testing::Gen;

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool condition, const std::string& what) {
    if (!condition && pass) {
      pass = false;
      failure = what;
    }
  }
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 means no runtime bound
  std::function<Outcome()> body;
};

std::string fmt(const char* format, double a, double b = 0, double c = 0) {
  char buffer[256];
  std::snprintf(buffer, sizeof buffer, format, a, b, c);
  return buffer;
}

// Instance family shared by the integer criteria 5, 8 and 9.
std::vector<LpInstance> quarter_family() {
  Gen gen(5005);
  std::vector<LpInstance> family;
  for (int k = 0; k < 200; ++k) family.push_back(gen.quarter_lp(gen.size(1, 4), gen.size(1, 4)));
  return family;
}

Outcome strong_duality() {
  Outcome out;
  Gen gen(1001);
  double worst = 0;
  for (int k = 0; k < 1000 && out.pass; ++k) {
    const LpInstance inst = gen.lp(gen.size(1, 8), gen.size(1, 8));
    const DualityCertificate cert = certify(inst, Tolerance(kTol));
    worst = std::max(worst, std::abs(cert.f_max - cert.phi_min));
    out.require(std::abs(cert.f_max - cert.phi_min) <= kTol, "gap above 1e-9");
    out.require(primal_feasible(inst, cert.x_opt, Tolerance(kTol)), "primal witness infeasible");
    out.require(dual_feasible(inst, cert.pi_opt, Tolerance(kTol)), "dual witness infeasible");
  }
  out.detail = fmt("1000 instances, max |f_max - phi_min| = %.3g", worst);
  return out;
}

Outcome weak_duality() {
  Outcome out;
  Gen gen(1002);
  std::size_t pairs = 0;
  for (int k = 0; k < 100 && out.pass; ++k) {
    const LpInstance inst = gen.lp(gen.size(1, 8), gen.size(1, 8));
    const Vector hat = solve_primal(inst).x;
    const Vector pi_bar = solve_dual(inst).pi;
    for (int s = 0; s < 100; ++s) {
      Vector x = hat;
      for (double& v : x) v -= gen.real(0, 10);
      Vector pi = pi_bar;
      for (double& v : pi) v += gen.real(0, 10);
      out.require(primal_feasible(inst, x, Tolerance(kTol)) && dual_feasible(inst, pi, Tolerance(kTol)),
                  "sampled pair not feasible");
      out.require(dot(inst.c, x) <= dot(pi, inst.b) + kTol, "c^T x > pi^T b");
      ++pairs;
    }
  }
  out.detail = fmt("%.0f feasible pairs over 100 instances", static_cast<double>(pairs));
  return out;
}

Outcome karp_vs_enumeration() {
  Outcome out;
  Gen gen(1003);
  std::size_t cyclic = 0;
  for (int k = 0; k < 200 && out.pass; ++k) {
    const Matrix a = gen.sparse(gen.size(1, 6), 0.7, -10, 10);
    const CycleMeanResult r = max_cycle_mean(a);
    const Scalar brute = oracle::brute_cycle_mean(a);
    if (is_epsilon(brute)) {
      out.require(is_epsilon(r.lambda), "acyclic matrix reported a cycle");
      continue;
    }
    ++cyclic;
    out.require(std::abs(r.lambda - brute) <= kTol, "Karp differs from enumeration");
    out.require(r.witness_cycle && std::abs(cycle_mean(a, *r.witness_cycle) - r.lambda) <= kTol,
                "witness cycle mean differs");
  }
  out.detail = fmt("200 matrices (%.0f cyclic) match enumeration", static_cast<double>(cyclic));
  return out;
}

Outcome kleene() {
  Outcome out;
  Gen gen(1004);
  for (int k = 0; k < 200 && out.pass; ++k) {
    Matrix a = gen.sparse(gen.size(1, 6), 0.7, -10, 10);
    const Scalar lambda = max_cycle_mean(a).lambda;
    if (!is_epsilon(lambda)) a = a.shifted(-lambda - (k % 2 == 0 ? 0.0 : gen.real(0, 2)));
    const Matrix star = kleene_star(a, Tolerance(kTol));
    out.require(near(star, oracle::brute_star(a), Tolerance(kTol)), "star differs from power sum");
    out.require(near(otimes(star, star), star, Tolerance(kTol)), "A* A* != A*");
  }
  std::size_t divergent = 0;
  for (int k = 0; k < 50 && out.pass; ++k) {
    const std::size_t n = gen.size(1, 6);
    Matrix a = gen.matrix(n, n, -10, 10);
    a = a.shifted(-max_cycle_mean(a).lambda + gen.real(0.01, 3));
    try {
      kleene_star(a, Tolerance(kTol));
    } catch (const DivergentStar&) {
      ++divergent;
    }
  }
  out.require(divergent == 50, "DivergentStar not raised");
  out.detail = fmt("200 stars match and are idempotent; %.0f/50 divergent raised", static_cast<double>(divergent));
  return out;
}

Outcome integer_oracles(const std::vector<LpInstance>& family) {
  Outcome out;
  for (const LpInstance& inst : family) {
    if (!out.pass) break;
    const double primal = solve_primal_integer(inst, Tolerance(kTol)).f_max_i;
    const double dual = solve_dual_integer_general(inst, Tolerance(kTol)).phi_min_i;
    const double real = solve_primal(inst).objective;
    out.require(std::abs(primal - oracle::brute_primal_integer(inst, oracle::primal_search_box(inst)).value) <= kTol,
                "f_max_I differs from brute force");
    out.require(std::abs(dual - oracle::brute_dual_integer(inst, oracle::dual_search_box(inst)).value) <= kTol,
                "phi_min_I differs from brute force");
    out.require(primal <= real + kTol && real <= dual + kTol, "sandwich violated");
  }
  out.detail = fmt("%.0f instances match both oracles; sandwich holds", static_cast<double>(family.size()));
  return out;
}

Outcome floor_regression() {
  Outcome out;
  const LpInstance inst{Matrix{{1, 2}, {3, 4}}, Vector{5.5, 6.25}, Vector{0, 0}};
  const IntDualResult r = solve_dual_integer_general(inst, Tolerance(kTol));
  const oracle::IntPoint brute = oracle::brute_dual_integer(inst, oracle::uniform_box(2, -10, 10));
  out.require(std::abs(r.phi_min_i - 3.25) <= kTol, "phi_min_I != 3.25");
  out.require(std::abs(brute.value - 3.25) <= kTol, "oracle != 3.25");
  out.require(near(r.pi_opt, Vector{-3, -3}, Tolerance(kTol)), "pi != (-3, -3)");
  out.detail = fmt("phi_min_I = %.17g, oracle = %.17g", r.phi_min_i, brute.value);
  return out;
}

Outcome direct_vs_iterative() {
  Outcome out;
  Gen gen(1007);
  for (int k = 0; k < 100 && out.pass; ++k) {
    const std::size_t m = gen.size(1, 6), n = gen.size(1, 6);
    const LpInstance inst{gen.matrix(m, n, -10, 10), gen.grid_vector(m, -10, 10, 1), gen.vector(n, -10, 10)};
    const IntDualResult direct = solve_dual_integer_direct(inst, Tolerance(kTol));
    const IntDualResult general = solve_dual_integer_general(inst, Tolerance(kTol));
    out.require(direct.phi_min_i == general.phi_min_i, "objectives differ");
  }
  out.detail = "100 integer-b instances agree exactly";
  return out;
}

Outcome iteration_bound(const std::vector<LpInstance>& family) {
  Outcome out;
  double worst_ratio = 0;
  for (const LpInstance& inst : family) {
    const std::size_t mn = inst.a.rows() * inst.a.cols();
    const IntDualResult r = solve_dual_integer_general(inst, Tolerance(kTol));
    out.require(r.iterations <= mn, "iterations exceed m*n");
    worst_ratio = std::max(worst_ratio, static_cast<double>(r.iterations) / static_cast<double>(mn));
  }
  out.detail = fmt("max iterations/(m*n) = %.3g", worst_ratio);
  return out;
}

Outcome floor_estimate(const std::vector<LpInstance>& family) {
  Outcome out;
  double worst = 0;
  for (const LpInstance& inst : family) {
    const double diff = std::abs(estimate_via_floor_b(inst, Tolerance(kTol)).estimate -
                                 solve_dual_integer_general(inst, Tolerance(kTol)).phi_min_i);
    worst = std::max(worst, diff);
    out.require(diff <= 1.0 + kTol, "estimate off by more than 1");
  }
  out.detail = fmt("max |estimate - phi_min_I| = %.3g", worst);
  return out;
}

Outcome no_gap_integer() {
  Outcome out;
  Gen gen(1010);
  for (int k = 0; k < 100 && out.pass; ++k) {
    const LpInstance inst = gen.integer_lp(gen.size(1, 6), gen.size(1, 6));
    const GapReport gap = duality_gap(inst, Tolerance(kTol));
    out.require(gap.lower == gap.real_optimum && gap.upper == gap.real_optimum, "integer gap not closed");
  }
  out.detail = "100 all-integer instances: f_max_I = phi_min_I = c^T(A#b)";
  return out;
}

Outcome tslp_optimality() {
  Outcome out;
  Gen gen(1011);
  double worst_route = 0;
  for (int k = 0; k < 200 && out.pass; ++k) {
    const TwoSidedInstance inst = gen.two_sided(gen.size(1, 6));
    const TwoSidedResult r = solve_tslp(inst, Tolerance(kTol));
    out.require(tslp_feasible(inst, r.y_opt, Tolerance(kTol)), "y_bar infeasible");
    const Matrix star = kleene_star(inst.a, Tolerance(kTol));
    const double route = solve_dual(substituted_dual_instance(inst, star)).objective;
    worst_route = std::max(worst_route, std::abs(route - r.g_min));
    out.require(std::abs(route - r.g_min) <= kTol, "lp-duality route disagrees");
    for (int s = 0; s < 1000; ++s) {
      // A* (u ⊕ d) is feasible for every u.
      const Vector y = otimes(star, oplus(gen.vector(inst.a.rows(), -20, 20), inst.d));
      out.require(tslp_feasible(inst, y, Tolerance(kTol)), "sample infeasible");
      out.require(dot(inst.c, y) >= r.g_min - kTol, "sample beats g_min");
    }
  }
  out.detail = fmt("200 instances x 1000 samples; max route difference %.3g", worst_route);
  return out;
}

Outcome tslp2_identity() {
  Outcome out;
  Gen gen(1012);
  for (int k = 0; k < 200 && out.pass; ++k) {
    const TwoSidedInstance inst = gen.two_sided(gen.size(1, 6));
    const TwoSidedResult r = solve_tslp2(inst, Tolerance(kTol));
    const Vector lhs = oplus(otimes(inst.a, r.y_opt), inst.d);
    out.require(near(lhs, r.y_opt, Tolerance(kTol)), "A y + d != y");
    const Matrix star = kleene_star(inst.a, Tolerance(kTol));
    out.require(r.g_min == dot(inst.c, otimes(star, inst.d)), "g_min != c^T (A* d)");
    out.require(r.g_min == dot(inst.c, r.y_opt), "g_min != c^T y_opt");
  }
  out.detail = "200 instances satisfy the equation; both values identical";
  return out;
}

Outcome galois() {
  Outcome out;
  Gen gen(1013);
  std::size_t holds = 0;
  for (int k = 0; k < 1000 && out.pass; ++k) {
    const std::size_t m = gen.size(1, 6), n = gen.size(1, 6);
    const Matrix a = gen.matrix(m, n, -10, 10);
    const Vector y = gen.vector(m, -10, 10);
    const Vector hat = otimes_min(conjugate(a), y);
    Vector x = hat;
    for (double& v : x) v += gen.real(-2, 0.5);
    const bool left = leq(otimes(a, x), y, Tolerance(kTol));
    const bool right = leq(x, hat, Tolerance(kTol));
    out.require(!left || right, "A x <= y but x > A# y");
    out.require(!right || left, "x <= A# y but A x > y");
    holds += left ? 1 : 0;
  }
  out.detail = fmt("1000 triples (%.0f with A x <= y), both directions hold", static_cast<double>(holds));
  return out;
}

Outcome cli_round_trip() {
  Outcome out;
  const auto pairs = tropical::testing::golden_pairs();
  out.require(pairs.size() >= 50, "fewer than 50 golden pairs");
  const auto scratch = std::filesystem::temp_directory_path() / "tropical_acceptance";
  std::filesystem::create_directories(scratch);
  std::size_t accepted = 0, rejected = 0, round_trips = 0;
  for (const auto& pair : pairs) {
    const io::InstanceFile instance = io::parse_instance(tropical::testing::slurp(pair.instance));
    const io::SolveOutcome solved =
        io::solve_instance(instance, Tolerance(instance.tol.value_or(kTol)));
    const std::string text = io::serialize_solution(solved.solution);
    const bool same = io::parse_solution(text).identical(solved.solution) &&
                      io::serialize_solution(io::parse_solution(text)) == text;
    out.require(same, pair.name + ": round-trip not bit-exact");
    round_trips += same ? 1 : 0;

    std::ostringstream sink, errors;
    const std::vector<std::string> check{"check", "--input", pair.instance.string(), "--solution",
                                         pair.solution.string()};
    const int ok = io::run(check, sink, errors);
    out.require(ok == 0, pair.name + ": check exit " + std::to_string(ok));
    accepted += ok == 0 ? 1 : 0;

    const auto tampered = scratch / pair.name;
    std::ofstream(tampered) << io::serialize_solution(
        tropical::testing::tamper(io::parse_solution(tropical::testing::slurp(pair.solution))));
    const std::vector<std::string> bad{"check", "--input", pair.instance.string(), "--solution",
                                       tampered.string()};
    const int code = io::run(bad, sink, errors);
    out.require(code == 3, pair.name + ": tampered check exit " + std::to_string(code));
    rejected += code == 3 ? 1 : 0;
  }
  std::filesystem::remove_all(scratch);
  out.detail = fmt("%.0f round-trips bit-exact, %.0f checks exit 0, %.0f tampered exit 3",
                   static_cast<double>(round_trips), static_cast<double>(accepted),
                   static_cast<double>(rejected));
  return out;
}

}  // namespace

int main() {
  const std::vector<LpInstance> family = quarter_family();
  const std::vector<Criterion> criteria{
      {1, "strong duality", 5, strong_duality},
      {2, "weak duality", 0, weak_duality},
      {3, "max cycle mean vs enumeration", 5, karp_vs_enumeration},
      {4, "Kleene star vs power sum", 0, kleene},
      {5, "integer duality vs oracles", 60, [&] { return integer_oracles(family); }},
      {6, "floor amendment regression", 0, floor_regression},
      {7, "direct vs iterative dual", 0, direct_vs_iterative},
      {8, "iteration bound m*n", 0, [&] { return iteration_bound(family); }},
      {9, "floor-b estimate within 1", 0, [&] { return floor_estimate(family); }},
      {10, "no gap for integer data", 0, no_gap_integer},
      {11, "TSLP optimality", 30, tslp_optimality},
      {12, "TSLP2 identity", 0, tslp2_identity},
      {13, "residuation Galois property", 0, galois},
      {14, "CLI round-trip and golden corpus", 0, cli_round_trip},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.body();
    } catch (const std::exception& e) {
      out.pass = false;
      out.failure = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && seconds > c.budget_seconds) {
      out.require(false, fmt("runtime %.2f s exceeds %.0f s", seconds, c.budget_seconds));
    }
    failed += out.pass ? 0 : 1;
    std::printf("%s  %2d  %-34s %s (%.2f s)\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.pass ? out.detail.c_str() : out.failure.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
