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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tropical/closure.hpp"
#include "tropical/int_duality.hpp"
#include "tropical/io.hpp"
#include "tropical/onesided.hpp"

namespace tropical::io {
namespace {

const Matrix& require_a(const InstanceFile& instance) {
  if (!instance.a) throw ParseError("/A", "missing field");
  return *instance.a;
}

void add_cycle(SolutionFile& out, const CycleMeanResult& mcm) {
  out.scalars["lambda"] = mcm.lambda;
  if (mcm.witness_cycle) out.indices["cycle"] = *mcm.witness_cycle;
}

void add_int_primal(SolutionFile& out, const LpInstance& lp, const IntPrimalResult& r) {
  out.vectors.insert_or_assign("x", r.x_opt);
  out.certificate["primal_residual"] = primal_residual(lp, r.x_opt);
}

void add_int_dual(SolutionFile& out, const LpInstance& lp, const IntDualResult& r,
                  Tolerance tol) {
  out.vectors.insert_or_assign("pi", r.pi_opt);
  out.method = std::string(to_string(r.method));
  out.iterations = r.iterations;
  const BlockingColumn blocking = blocking_column(lp, tol);
  out.certificate["blocking_column"] = static_cast<double>(blocking.column);
  out.certificate["cover_cost"] = blocking.cover_cost;
  out.certificate["dual_residual"] = dual_residual(lp, r.pi_opt);
}

SolveOutcome solve_lp(const InstanceFile& instance, Tolerance tol) {
  const LpInstance lp = instance.lp();
  const DualityCertificate cert = certify(lp, tol);
  SolutionFile out;
  out.problem = instance.problem;
  out.status = "optimal";
  out.scalars["objective"] =
      instance.problem == ProblemKind::kPrimal ? cert.f_max : cert.phi_min;
  out.scalars["primal_objective"] = cert.f_max;
  out.scalars["dual_objective"] = cert.phi_min;
  out.vectors.insert_or_assign("x", cert.x_opt);
  out.vectors.insert_or_assign("pi", cert.pi_opt);
  out.certificate["primal_residual"] = primal_residual(lp, cert.x_opt);
  out.certificate["dual_residual"] = dual_residual(lp, cert.pi_opt);
  out.certificate["gap"] = std::abs(cert.f_max - cert.phi_min);
  return {std::move(out), kExitOk};
}

SolveOutcome solve_integer(const InstanceFile& instance, Tolerance tol) {
  const LpInstance lp = instance.lp();
  SolutionFile out;
  out.problem = instance.problem;
  out.status = "optimal";
  switch (instance.problem) {
    case ProblemKind::kPrimalInteger: {
      const IntPrimalResult r = solve_primal_integer(lp, tol);
      out.scalars["objective"] = r.f_max_i;
      add_int_primal(out, lp, r);
      break;
    }
    case ProblemKind::kDualInteger: {
      const IntDualResult r = solve_dual_integer(lp, tol);
      out.scalars["objective"] = r.phi_min_i;
      add_int_dual(out, lp, r, tol);
      break;
    }
    default: {
      const GapReport gap = duality_gap(lp, tol);
      out.scalars["lower"] = gap.lower;
      out.scalars["real"] = gap.real_optimum;
      out.scalars["upper"] = gap.upper;
      out.scalars["floor_b_estimate"] = estimate_via_floor_b(lp, tol).estimate;
      add_int_primal(out, lp, solve_primal_integer(lp, tol));
      add_int_dual(out, lp, solve_dual_integer(lp, tol), tol);
      break;
    }
  }
  return {std::move(out), kExitOk};
}

SolveOutcome solve_two_sided(const InstanceFile& instance, Tolerance tol) {
  const TwoSidedInstance inst = instance.two_sided();
  SolutionFile out;
  out.problem = instance.problem;
  try {
    const TwoSidedResult r = instance.problem == ProblemKind::kTslp
                                 ? solve_tslp(inst, tol)
                                 : solve_tslp2(inst, tol);
    const LowerBoundPath path = lower_bound_path(inst, tol);
    out.status = instance.problem == ProblemKind::kTslp
                     ? std::string("optimal")
                     : std::string(to_string(r.feasibility_kind));
    out.scalars["objective"] = r.g_min;
    out.scalars["lambda"] = r.lambda;
    out.vectors.insert_or_assign("y", r.y_opt);
    if (r.u_opt) out.vectors.insert_or_assign("u", *r.u_opt);
    out.indices["path"] = path.nodes;
    out.certificate["path_bound"] = path.bound;
    if (instance.problem == ProblemKind::kTslp) {
      out.certificate["feasibility_residual"] = tslp_residual(inst, r.y_opt);
    } else {
      const Vector lhs = oplus(otimes(inst.a, r.y_opt), inst.d);
      Scalar worst = 0;
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        worst = std::max(worst, std::abs(lhs[i] - r.y_opt[i]));
      }
      out.certificate["equation_residual"] = worst;
    }
    return {std::move(out), kExitOk};
  } catch (const InfeasibleLambda&) {
    out.status = std::string(to_string(FeasibilityKind::kInfeasibleLambdaPositive));
    add_cycle(out, max_cycle_mean(inst.a));
    return {std::move(out), kExitInfeasible};
  }
}

SolveOutcome solve_onesided(const InstanceFile& instance, Tolerance tol) {
  if (!instance.b) throw ParseError("/b", "missing field");
  const OneSidedSolveResult r = solve_equality(require_a(instance), *instance.b, tol);
  SolutionFile out;
  out.problem = instance.problem;
  out.status = "solved";
  out.solvable = r.solvable_as_equality;
  out.vectors.insert_or_assign("principal", r.principal);
  out.certificate["residual"] = r.residual;
  return {std::move(out), kExitOk};
}

// --- checking -------------------------------------------------------------

class Checker {
 public:
  Checker(const SolutionFile& solution, Tolerance tol) : solution_(solution), tol_(tol) {}

  bool ok() const { return reason_.empty(); }
  CheckReport report() const { return {ok(), reason_}; }

  void expect(bool condition, const std::string& what) {
    if (!condition && reason_.empty()) reason_ = what;
  }

  const Scalar* scalar(const std::string& key) {
    auto it = solution_.scalars.find(key);
    expect(it != solution_.scalars.end(), "missing value \"" + key + "\"");
    return it == solution_.scalars.end() ? nullptr : &it->second;
  }

  const Scalar* cert(const std::string& key) {
    auto it = solution_.certificate.find(key);
    expect(it != solution_.certificate.end(), "missing certificate entry \"" + key + "\"");
    return it == solution_.certificate.end() ? nullptr : &it->second;
  }

  const Vector* vector(const std::string& key, std::size_t size) {
    auto it = solution_.vectors.find(key);
    expect(it != solution_.vectors.end(), "missing vector \"" + key + "\"");
    if (it == solution_.vectors.end()) return nullptr;
    expect(it->second.size() == size, "vector \"" + key + "\" has the wrong length");
    expect(it->second.is_finite(), "vector \"" + key + "\" has ε entries");
    return ok() ? &it->second : nullptr;
  }

  const std::vector<std::size_t>* indices(const std::string& key, std::size_t bound) {
    auto it = solution_.indices.find(key);
    expect(it != solution_.indices.end(), "missing node list \"" + key + "\"");
    if (it == solution_.indices.end()) return nullptr;
    expect(!it->second.empty(), "node list \"" + key + "\" is empty");
    for (std::size_t v : it->second) expect(v < bound, "node index out of range");
    return ok() ? &it->second : nullptr;
  }

  void same(Scalar claimed, Scalar actual, const std::string& what) {
    expect(near(claimed, actual, tol_), what + ": claimed " + std::to_string(claimed) +
                                            ", recomputed " + std::to_string(actual));
  }

  Tolerance tol() const { return tol_; }

 private:
  const SolutionFile& solution_;
  Tolerance tol_;
  std::string reason_;
};

bool all_integral(const Vector& v, Tolerance tol) {
  return std::all_of(v.begin(), v.end(), [&](Scalar x) { return is_integral(x, tol); });
}

// x integral, feasible, and x + e_j infeasible for every j, so x = ⌊A#b⌋.
void check_int_primal(Checker& check, const LpInstance& lp, const Vector& x,
                      Scalar claimed) {
  const Tolerance tol = check.tol();
  check.expect(all_integral(x, tol), "x is not integral");
  check.expect(primal_feasible(lp, x, tol), "x violates A ⊗ x ≤ b");
  check.same(claimed, dot(lp.c, x), "primal objective");
  for (std::size_t j = 0; j < lp.a.cols(); ++j) {
    bool blocked = false;
    for (std::size_t i = 0; i < lp.a.rows(); ++i) {
      blocked = blocked || lp.a(i, j) + x[j] + 1.0 > lp.b[i] + tol.abs_tol;
    }
    check.expect(blocked, "x + e_" + std::to_string(j) + " is still feasible");
  }
}

// π integral, feasible, and no worse than the blocking column's cover cost.
void check_int_dual(Checker& check, const LpInstance& lp, const Vector& pi,
                    Scalar claimed) {
  const Tolerance tol = check.tol();
  check.expect(all_integral(pi, tol), "pi is not integral");
  check.expect(dual_feasible(lp, pi, tol), "pi violates πᵀ ⊗ A ≥ cᵀ");
  check.same(claimed, dot(pi, lp.b), "dual objective");
  const Scalar* column = check.cert("blocking_column");
  if (!column) return;
  check.expect(*column >= 0 && *column < static_cast<double>(lp.a.cols()) &&
                   *column == std::floor(*column),
               "blocking_column is not a column index");
  if (!check.ok()) return;
  const Scalar bound = column_cover_cost(lp, static_cast<std::size_t>(*column), tol);
  check.expect(claimed <= bound + tol.abs_tol,
               "dual objective exceeds the blocking column's cover cost");
}

void check_lp(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  const LpInstance lp = instance.lp();
  const Scalar* objective = check.scalar("objective");
  const Scalar* primal = check.scalar("primal_objective");
  const Scalar* dual = check.scalar("dual_objective");
  const Vector* x = check.vector("x", lp.a.cols());
  const Vector* pi = check.vector("pi", lp.a.rows());
  if (!check.ok()) return;
  check.expect(s.status == "optimal", "unexpected status \"" + s.status + "\"");
  check.expect(primal_feasible(lp, *x, check.tol()), "x violates A ⊗ x ≤ b");
  check.expect(dual_feasible(lp, *pi, check.tol()), "pi violates πᵀ ⊗ A ≥ cᵀ");
  check.same(*primal, dot(lp.c, *x), "primal objective");
  check.same(*dual, dot(*pi, lp.b), "dual objective");
  check.same(*primal, *dual, "duality gap");
  check.same(*objective, instance.problem == ProblemKind::kPrimal ? *primal : *dual,
             "objective");
}

void check_integer(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  const LpInstance lp = instance.lp();
  check.expect(s.status == "optimal", "unexpected status \"" + s.status + "\"");
  if (instance.problem == ProblemKind::kPrimalInteger) {
    const Scalar* objective = check.scalar("objective");
    const Vector* x = check.vector("x", lp.a.cols());
    if (check.ok()) check_int_primal(check, lp, *x, *objective);
    return;
  }
  if (instance.problem == ProblemKind::kDualInteger) {
    const Scalar* objective = check.scalar("objective");
    const Vector* pi = check.vector("pi", lp.a.rows());
    if (check.ok()) check_int_dual(check, lp, *pi, *objective);
    return;
  }
  const Scalar* lower = check.scalar("lower");
  const Scalar* real = check.scalar("real");
  const Scalar* upper = check.scalar("upper");
  const Scalar* estimate = check.scalar("floor_b_estimate");
  const Vector* x = check.vector("x", lp.a.cols());
  const Vector* pi = check.vector("pi", lp.a.rows());
  if (!check.ok()) return;
  check_int_primal(check, lp, *x, *lower);
  check_int_dual(check, lp, *pi, *upper);
  check.same(*real, dot(lp.c, greatest_subsolution(lp.a, lp.b)), "real optimum");
  check.expect(*lower <= *real + check.tol().abs_tol && *real <= *upper + check.tol().abs_tol,
               "gap interval is not ordered");
  check.expect(std::abs(*estimate - *upper) <= 1.0, "floor-b estimate is off by 1 or more");
}

void check_two_sided(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  const TwoSidedInstance inst = instance.two_sided();
  const std::size_t n = inst.a.rows();
  if (s.status == to_string(FeasibilityKind::kInfeasibleLambdaPositive)) {
    const Scalar* lambda = check.scalar("lambda");
    const auto* cycle = check.indices("cycle", n);
    if (!check.ok()) return;
    check.same(*lambda, cycle_mean(inst.a, *cycle), "cycle mean");
    check.expect(*lambda > check.tol().abs_tol, "cycle mean does not exceed 0");
    return;
  }
  const bool tslp = instance.problem == ProblemKind::kTslp;
  check.expect(tslp ? s.status == "optimal"
                    : (s.status == to_string(FeasibilityKind::kFeasible) ||
                       s.status == to_string(FeasibilityKind::kUniqueFixedPoint)),
               "unexpected status \"" + s.status + "\"");
  const Scalar* objective = check.scalar("objective");
  const Vector* y = check.vector("y", n);
  const auto* path = check.indices("path", n);
  if (!check.ok()) return;
  check.expect(tslp ? tslp_feasible(inst, *y, check.tol()) : tslp2_feasible(inst, *y, check.tol()),
               tslp ? "y violates A ⊗ y ⊕ d ≤ y" : "y violates A ⊗ y ⊕ d = y");
  check.same(*objective, dot(inst.c, *y), "objective");
  check.same(*objective, path_bound(inst, *path), "lower-bound path weight");
}

void check_star(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  Matrix a = require_a(instance);
  if (instance.lambda) a = a.shifted(-*instance.lambda);
  if (s.status == "divergent") {
    const Scalar* lambda = check.scalar("lambda");
    const auto* cycle = check.indices("cycle", a.rows());
    if (!check.ok()) return;
    const Scalar own = cycle_mean(require_a(instance), *cycle);
    check.same(*lambda, own, "cycle mean");
    check.expect(cycle_mean(a, *cycle) > check.tol().abs_tol, "cycle mean does not exceed the shift");
    return;
  }
  check.expect(s.status == "finite", "unexpected status \"" + s.status + "\"");
  check.expect(s.star.has_value(), "missing matrix \"star\"");
  if (!check.ok()) return;
  const Matrix& star = *s.star;
  check.expect(star.rows() == a.rows() && star.cols() == a.cols(), "star has the wrong shape");
  if (!check.ok()) return;
  check.expect(leq(Matrix::identity(a.rows()), star, check.tol()), "star is not ≥ I");
  check.expect(near(oplus(otimes(a, star), Matrix::identity(a.rows())), star, check.tol()),
               "star is not a fixed point of S = A ⊗ S ⊕ I");
}

bool acyclic(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) indegree[j] += is_epsilon(a(i, j)) ? 0 : 1;
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j) {
      if (!is_epsilon(a(v, j)) && --indegree[j] == 0) ready.push_back(j);
    }
  }
  return removed == n;
}

void check_mcm(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  const Matrix& a = require_a(instance);
  const Scalar* lambda = check.scalar("lambda");
  if (!check.ok()) return;
  if (s.status == "acyclic") {
    check.expect(is_epsilon(*lambda), "acyclic status with finite lambda");
    check.expect(acyclic(a), "digraph has a cycle");
    return;
  }
  check.expect(s.status == "optimal", "unexpected status \"" + s.status + "\"");
  const auto* cycle = check.indices("cycle", a.rows());
  const Vector* x = check.vector("subeigenvector", a.rows());
  if (!check.ok()) return;
  std::vector<std::size_t> sorted = *cycle;
  std::sort(sorted.begin(), sorted.end());
  check.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
               "cycle is not elementary");
  check.same(*lambda, cycle_mean(a, *cycle), "cycle mean");
  check.expect(subeigen_member(a, *lambda, *x, check.tol()),
               "subeigenvector violates A ⊗ x ≤ λ ⊗ x");
}

void check_onesided(Checker& check, const InstanceFile& instance, const SolutionFile& s) {
  const Matrix& a = require_a(instance);
  if (!instance.b) throw ParseError("/b", "missing field");
  const Vector& b = *instance.b;
  check.expect(s.status == "solved", "unexpected status \"" + s.status + "\"");
  check.expect(s.solvable.has_value(), "missing flag \"solvable\"");
  const Vector* x = check.vector("principal", a.cols());
  if (!check.ok()) return;
  const Tolerance tol = check.tol();
  check.expect(leq(otimes(a, *x), b, tol), "principal violates A ⊗ x ≤ b");
  for (std::size_t j = 0; j < a.cols(); ++j) {
    bool tight = false;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      tight = tight || (!is_epsilon(a(i, j)) && a(i, j) + (*x)[j] >= b[i] - tol.abs_tol);
    }
    check.expect(tight, "principal component " + std::to_string(j) + " could be raised");
  }
  check.expect(*s.solvable == near(otimes(a, *x), b, tol), "solvable flag is wrong");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

struct Emitter {
  std::string output_path;
  std::string format = "json";

  void emit(const SolutionFile& solution, std::ostream& out) const {
    const std::string text =
        format == "text" ? render_text(solution) : serialize_solution(solution);
    if (output_path.empty()) {
      out << text;
      return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) throw ParseError(output_path, "cannot open output file");
    file << text;
  }
};

}  // namespace

SolveOutcome solve_star(const InstanceFile& instance, Tolerance tol) {
  const Matrix& a = require_a(instance);
  SolutionFile out;
  out.problem = ProblemKind::kStar;
  try {
    out.star = instance.lambda ? kleene_star_scaled(a, *instance.lambda, tol)
                               : kleene_star(a, tol);
    out.status = "finite";
    return {std::move(out), kExitOk};
  } catch (const DivergentStar&) {
    out.status = "divergent";
    add_cycle(out, max_cycle_mean(a));
    return {std::move(out), kExitInfeasible};
  }
}

SolveOutcome solve_mcm(const InstanceFile& instance, Tolerance tol) {
  const Matrix& a = require_a(instance);
  if (!a.is_square()) throw ParseError("/A", "matrix must be square");
  SolutionFile out;
  out.problem = ProblemKind::kMcm;
  const CycleMeanResult mcm = max_cycle_mean(a);
  add_cycle(out, mcm);
  if (is_epsilon(mcm.lambda)) {
    out.status = "acyclic";
  } else {
    out.status = "optimal";
    out.vectors.insert_or_assign(
        "subeigenvector", otimes(kleene_star_scaled(a, mcm.lambda, tol), Vector(a.rows(), kUnit)));
  }
  return {std::move(out), kExitOk};
}

SolveOutcome solve_instance(const InstanceFile& instance, Tolerance tol) {
  switch (instance.problem) {
    case ProblemKind::kPrimal:
    case ProblemKind::kDual:
      return solve_lp(instance, tol);
    case ProblemKind::kPrimalInteger:
    case ProblemKind::kDualInteger:
    case ProblemKind::kGap:
      return solve_integer(instance, tol);
    case ProblemKind::kTslp:
    case ProblemKind::kTslp2:
      return solve_two_sided(instance, tol);
    case ProblemKind::kStar:
      return solve_star(instance, tol);
    case ProblemKind::kMcm:
      return solve_mcm(instance, tol);
    case ProblemKind::kOnesided:
      return solve_onesided(instance, tol);
  }
  throw ParseError("/problem", "unsupported problem kind");
}

CheckReport check_solution(const InstanceFile& instance, const SolutionFile& solution,
                           Tolerance tol) {
  Checker check(solution, tol);
  const ProblemKind kind = solution.problem;
  const bool command_kind = kind == ProblemKind::kStar || kind == ProblemKind::kMcm;
  check.expect(command_kind || kind == instance.problem,
               "solution is for problem \"" + std::string(to_string(kind)) +
                   "\", instance is \"" + std::string(to_string(instance.problem)) + "\"");
  if (!check.ok()) return check.report();
  switch (kind) {
    case ProblemKind::kPrimal:
    case ProblemKind::kDual:
      check_lp(check, instance, solution);
      break;
    case ProblemKind::kPrimalInteger:
    case ProblemKind::kDualInteger:
    case ProblemKind::kGap:
      check_integer(check, instance, solution);
      break;
    case ProblemKind::kTslp:
    case ProblemKind::kTslp2:
      check_two_sided(check, instance, solution);
      break;
    case ProblemKind::kStar:
      check_star(check, instance, solution);
      break;
    case ProblemKind::kMcm:
      check_mcm(check, instance, solution);
      break;
    case ProblemKind::kOnesided:
      check_onesided(check, instance, solution);
      break;
  }
  return check.report();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical (max-plus) linear and integer programming toolkit", "tropical"};
  app.require_subcommand(1);

  std::string input_path;
  std::string solution_path;
  std::optional<double> tol_flag;
  Emitter emitter;

  auto add_common = [&](CLI::App* sub, bool with_output) {
    sub->add_option("--input", input_path, "Instance file (JSON)")->required();
    sub->add_option("--tol", tol_flag, "Absolute tolerance (default 1e-9)")
        ->check(CLI::NonNegativeNumber);
    if (with_output) {
      sub->add_option("--output", emitter.output_path, "Write the solution here instead of stdout");
      sub->add_option("--format", emitter.format, "Output format")
          ->check(CLI::IsMember({"json", "text"}));
    }
  };
  CLI::App* solve = app.add_subcommand("solve", "Solve an instance and print its solution");
  add_common(solve, true);
  CLI::App* check = app.add_subcommand("check", "Validate a solution's certificate");
  add_common(check, false);
  check->add_option("--solution", solution_path, "Solution file (JSON)")->required();
  CLI::App* star = app.add_subcommand("star", "Kleene star of the instance matrix A");
  add_common(star, true);
  CLI::App* mcm = app.add_subcommand("mcm", "Maximum cycle mean of the instance matrix A");
  add_common(mcm, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInputError;
  }

  try {
    const InstanceFile instance = parse_instance(read_file(input_path));
    const Tolerance tol(tol_flag ? *tol_flag : instance.tol.value_or(kDefaultTolerance));

    if (check->parsed()) {
      const SolutionFile solution = parse_solution(read_file(solution_path));
      const CheckReport report = check_solution(instance, solution, tol);
      if (!report.valid) {
        err << "certificate violation: " << report.reason << "\n";
        return kExitCertificateViolation;
      }
      out << "ok\n";
      return kExitOk;
    }

    SolveOutcome outcome = star->parsed()  ? solve_star(instance, tol)
                           : mcm->parsed() ? solve_mcm(instance, tol)
                                           : solve_instance(instance, tol);
    emitter.emit(outcome.solution, out);
    const CheckReport self = check_solution(instance, outcome.solution, tol);
    if (!self.valid) {
      err << "internal certificate violation: " << self.reason << "\n";
      return kExitCertificateViolation;
    }
    if (outcome.code == kExitInfeasible) {
      err << "instance is " << outcome.solution.status << "\n";
    }
    return outcome.code;
  } catch (const CertificateViolation& e) {
    err << "internal certificate violation: " << e.what() << "\n";
    return kExitCertificateViolation;
  } catch (const Error& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitCertificateViolation;
  }
}

}  // namespace tropical::io
