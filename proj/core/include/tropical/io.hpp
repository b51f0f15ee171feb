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
 * @file io.hpp
 * @brief Instance and solution files plus the command-line driver.
 *
 * Instances are JSON objects such as
 *
 *   {"problem": "primal", "A": [[1, 2], [3, 4]], "b": [5, 6], "c": [0, 0]}
 *
 * with ε written as the string "-inf" where the problem kind allows it
 * (star, mcm, and the A matrix of onesided). Solutions are JSON objects with
 * keys in lexicographic order, reals printed with 17 significant digits and
 * ε printed as "-inf", so parse(serialize(s)) reproduces s bit for bit.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/errors.hpp"
#include "tropical/lp_duality.hpp"
#include "tropical/matrix.hpp"
#include "tropical/twosided.hpp"

namespace tropical::io {

inline constexpr std::string_view kToolVersion = "tropical 1.0.0";

enum class ProblemKind {
  kPrimal,
  kDual,
  kPrimalInteger,
  kDualInteger,
  kGap,
  kTslp,
  kTslp2,
  kStar,
  kMcm,
  kOnesided,
};

std::string_view to_string(ProblemKind kind);
std::optional<ProblemKind> problem_kind_from_string(std::string_view name);

// Malformed text, a missing or mistyped field, bad dimensions, or a forbidden
// value. `location` is a byte offset ("byte 17") or a JSON pointer ("/A/1/0").
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct InstanceFile {
  ProblemKind problem = ProblemKind::kPrimal;
  std::optional<Matrix> a;
  std::optional<Vector> b;
  std::optional<Vector> c;
  std::optional<Vector> d;
  // Optional shift for the star kind: the result is (A_λ)*.
  std::optional<Scalar> lambda;
  std::optional<double> tol;

  LpInstance lp() const;
  TwoSidedInstance two_sided() const;
};

InstanceFile parse_instance(std::string_view text);
std::string serialize_instance(const InstanceFile& instance);

struct SolutionFile {
  ProblemKind problem = ProblemKind::kPrimal;
  std::string status;
  std::string tool_version{kToolVersion};
  std::optional<std::string> method;
  std::optional<std::uint64_t> iterations;
  std::optional<bool> solvable;
  std::map<std::string, Scalar> scalars;
  std::map<std::string, Vector> vectors;
  std::map<std::string, std::vector<std::size_t>> indices;
  std::optional<Matrix> star;
  std::map<std::string, Scalar> certificate;

  // Bitwise equality on every real (so -0.0 differs from 0.0).
  bool identical(const SolutionFile& other) const;
};

SolutionFile parse_solution(std::string_view text);
std::string serialize_solution(const SolutionFile& solution);
// Human-oriented rendering; not meant to be parsed back.
std::string render_text(const SolutionFile& solution);

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 1,
  kExitInputError = 2,
  kExitCertificateViolation = 3,
};

struct SolveOutcome {
  SolutionFile solution;
  ExitCode code = kExitOk;
};

// Dispatches on the instance kind. Infeasible/divergent instances produce a
// solution carrying a witness cycle and kExitInfeasible. Input problems throw
// ParseError or a library error; internal failures throw CertificateViolation.
SolveOutcome solve_instance(const InstanceFile& instance, Tolerance tol);

// The `star` and `mcm` commands: run on the instance's A whatever its kind.
SolveOutcome solve_star(const InstanceFile& instance, Tolerance tol);
SolveOutcome solve_mcm(const InstanceFile& instance, Tolerance tol);

struct CheckReport {
  bool valid = false;
  std::string reason;  // first failed assertion when !valid
};

// Validates a solution's certificate against the instance using only cheap
// evaluations (products, feasibility tests, path and cycle weights).
CheckReport check_solution(const InstanceFile& instance, const SolutionFile& solution,
                           Tolerance tol);

// Full command-line front end. args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tropical::io
