// Copyright 2026 The povm-forge Authors
//
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

#include "povm/solidstate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "povm/error.hpp"

namespace povm {

double SolidStateConfig::beta() const { return std::sqrt((1.0 - alpha) * (1.0 + alpha)); }

void validate(const SolidStateConfig& cfg) {
  if (!std::isfinite(cfg.alpha) || cfg.alpha < 0.0 || cfg.alpha > 1.0) {
    throw Error(ErrorCode::kOutOfRange, "alpha must lie in [0, 1]");
  }
  if (!std::isfinite(cfg.xi)) throw Error(ErrorCode::kOutOfRange, "xi must be finite");
}

// alpha'^2 = (1 - (2 alpha^2 - 1) cos 2xi) / 2 = alpha^2 sin^2 xi + beta^2 cos^2 xi.
// The hypot form keeps full precision for small alpha or alpha'.
double alpha_prime(double alpha, double xi) {
  const double beta = std::sqrt((1.0 - alpha) * (1.0 + alpha));
  return std::min(1.0, std::hypot(alpha * std::sin(xi), beta * std::cos(xi)));
}

BranchOperators partial_cnot_branches(const SolidStateConfig& cfg) {
  validate(cfg);
  const double a = cfg.alpha;
  const double b = cfg.beta();
  const double c = std::cos(cfg.xi);
  const double s = std::sin(cfg.xi);
  return {Complex2x2::diag(a, Complex(a * c, b * s)), Complex2x2::diag(b, Complex(b * c, a * s))};
}

namespace {

TwoQubitState apply_partial_cnot(const TwoQubitState& in, double xi) {
  const double c = std::cos(xi);
  const Complex is(0.0, std::sin(xi));
  TwoQubitState out = in;
  // system |->: ancilla gets cos(xi) I + i sin(xi) tau_x
  out[2] = c * in[2] + is * in[3];
  out[3] = is * in[2] + c * in[3];
  return out;
}

}  // namespace

BranchOperators partial_cnot_circuit(const SolidStateConfig& cfg) {
  validate(cfg);
  BranchOperators x{Complex2x2::zero(), Complex2x2::zero()};
  for (int s = 0; s < 2; ++s) {
    TwoQubitState psi{};
    psi[2 * s] = cfg.alpha;
    psi[2 * s + 1] = cfg.beta();
    const TwoQubitState out = apply_partial_cnot(psi, cfg.xi);
    for (int row = 0; row < 2; ++row) {
      x.x1(row, s) = out[2 * row];  // ancilla read as 0
      x.x2(row, s) = out[2 * row + 1];
    }
  }
  return {x.x1, x.x2};
}

SolidStateResult partial_cnot_measurement(const SolidStateConfig& cfg) {
  const BranchOperators x = partial_cnot_branches(cfg);
  const double ap = alpha_prime(cfg.alpha, cfg.xi);
  const PolarDecomposition p0 = right_polar_decompose(x.x1);
  const PolarDecomposition p1 = right_polar_decompose(x.x2);
  SolidStateResult res;
  res.x0 = x.x1;
  res.x1 = x.x2;
  res.alpha_prime = ap;
  // sqrt(1 - alpha'^2) = |alpha cos xi + i beta sin xi|
  res.m0 = Complex2x2::diag(cfg.alpha, std::hypot(cfg.alpha * std::cos(cfg.xi), cfg.beta() * std::sin(cfg.xi)));
  res.m1 = Complex2x2::diag(cfg.beta(), ap);
  res.correction0 = p0.unitary_part;
  res.correction1 = p1.unitary_part;
  return res;
}

// m0, m1 exact here; cos(pi/2) ~ 6e-17 leaks into the general path
SolidStateResult cnot_measurement(double alpha) {
  SolidStateResult res = partial_cnot_measurement({alpha, std::numbers::pi / 2.0});
  const double b = SolidStateConfig{alpha, 0.0}.beta();
  res.m0 = Complex2x2::diag(alpha, b);
  res.m1 = Complex2x2::diag(b, alpha);
  res.alpha_prime = alpha;
  return res;
}

}  // namespace povm
