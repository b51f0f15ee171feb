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

#include <stdexcept>
#include <string>

namespace tropical {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// An ε (or otherwise non-finite) value reached an operation defined over ℝ only.
class EpsilonEntry : public Error {
 public:
  using Error::Error;
};

// The Kleene star series does not converge (positive cycle mean).
class DivergentStar : public Error {
 public:
  DivergentStar(const std::string& what, double lambda)
      : Error(what), lambda_(lambda) {}
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

// A two-sided program has no finite feasible point because λ(A) > 0.
class InfeasibleLambda : public Error {
 public:
  InfeasibleLambda(const std::string& what, double lambda)
      : Error(what), lambda_(lambda) {}
  double lambda() const noexcept { return lambda_; }

 private:
  double lambda_;
};

class NonIntegerB : public Error {
 public:
  using Error::Error;
};

// A solver produced a witness that fails its own optimality certificate.
// This is an internal bug, never a property of the input.
class CertificateViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace tropical
