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

#include "tropical/lp_duality.hpp"

#include <cmath>
#include <string>

#include "tropical/errors.hpp"
#include "tropical/onesided.hpp"

namespace tropical {

void LpInstance::validate() const {
  if (a.rows() != b.size()) {
    throw DimensionMismatch("LP instance: A has " + std::to_string(a.rows()) +
                            " rows but b has " + std::to_string(b.size()) +
                            " entries");
  }
  if (a.cols() != c.size()) {
    throw DimensionMismatch("LP instance: A has " + std::to_string(a.cols()) +
                            " columns but c has " + std::to_string(c.size()) +
                            " entries");
  }
  require_finite(a, "LP instance A");
  require_finite(b, "LP instance b");
  require_finite(c, "LP instance c");
}

PrimalSolution solve_primal(const LpInstance& inst) {
  inst.validate();
  Vector x = greatest_subsolution(inst.a, inst.b);
  const Scalar objective = dot(inst.c, x);
  return {std::move(x), objective};
}

DualSolution solve_dual(const LpInstance& inst) {
  inst.validate();
  // t = cᵀ(A#b) does not depend on anything but the instance; π̄ᵀ = t ⊗ b#.
  const Scalar t = dot(inst.c, greatest_subsolution(inst.a, inst.b));
  Vector pi = otimes(t, conjugate(inst.b));
  const Scalar objective = dot(pi, inst.b);
  return {std::move(pi), objective};
}

Scalar primal_residual(const LpInstance& inst, const Vector& x) {
  const Vector image = otimes(inst.a, x);
  Scalar worst = image[0] - inst.b[0];
  for (std::size_t i = 1; i < image.size(); ++i) {
    worst = std::max(worst, image[i] - inst.b[i]);
  }
  return worst;
}

Scalar dual_residual(const LpInstance& inst, const Vector& pi) {
  const Vector image = otimes(pi, inst.a);
  Scalar worst = inst.c[0] - image[0];
  for (std::size_t j = 1; j < image.size(); ++j) {
    worst = std::max(worst, inst.c[j] - image[j]);
  }
  return worst;
}

bool primal_feasible(const LpInstance& inst, const Vector& x, Tolerance tol) {
  return x.is_finite() && primal_residual(inst, x) <= tol.abs_tol;
}

bool dual_feasible(const LpInstance& inst, const Vector& pi, Tolerance tol) {
  return pi.is_finite() && dual_residual(inst, pi) <= tol.abs_tol;
}

DualityCertificate certify(const LpInstance& inst, Tolerance tol) {
  PrimalSolution primal = solve_primal(inst);
  DualSolution dual = solve_dual(inst);
  DualityCertificate cert{std::move(primal.x), std::move(dual.pi),
                          primal.objective, dual.objective};
  if (!verify(inst, cert, tol)) {
    throw CertificateViolation(
        "certify: witnesses fail feasibility or leave a gap (f_max = " +
        std::to_string(cert.f_max) + ", phi_min = " +
        std::to_string(cert.phi_min) + ")");
  }
  return cert;
}

bool verify(const LpInstance& inst, const DualityCertificate& cert,
            Tolerance tol) {
  inst.validate();
  if (cert.x_opt.size() != inst.a.cols() || cert.pi_opt.size() != inst.a.rows()) {
    return false;
  }
  if (!std::isfinite(cert.f_max) || !std::isfinite(cert.phi_min)) return false;
  return primal_feasible(inst, cert.x_opt, tol) &&
         dual_feasible(inst, cert.pi_opt, tol) &&
         near(dot(inst.c, cert.x_opt), cert.f_max, tol) &&
         near(dot(cert.pi_opt, inst.b), cert.phi_min, tol) &&
         near(cert.f_max, cert.phi_min, tol);
}

}  // namespace tropical
