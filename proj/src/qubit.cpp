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

#include "povm/qubit.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "povm/error.hpp"

namespace povm {

PolarizationState PolarizationState::from_amplitudes(Complex c_h, Complex c_v, double tol) {
  const double n2 = std::norm(c_h) + std::norm(c_v);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > tol) {
    throw Error(ErrorCode::kOutOfRange, "state amplitudes are not normalised");
  }
  const Ket fixed = fix_phase(Ket{c_h, c_v});
  return PolarizationState(fixed[0], fixed[1]);
}

PolarizationState PolarizationState::normalized(const Ket& v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kOutOfRange, "cannot normalise a zero or non-finite vector");
  }
  const Ket fixed = fix_phase(scale(v, 1.0 / n));
  return PolarizationState(fixed[0], fixed[1]);
}

PolarizationState PolarizationState::preset(std::string_view name) {
  const double h = std::numbers::sqrt2 / 2.0;
  if (name == "H") return PolarizationState(1.0, 0.0);
  if (name == "V") return PolarizationState(0.0, 1.0);
  if (name == "D") return PolarizationState(h, h);
  if (name == "A") return PolarizationState(h, -h);
  if (name == "R") return PolarizationState(h, Complex(0.0, h));
  if (name == "L") return PolarizationState(h, Complex(0.0, -h));
  throw Error(ErrorCode::kParse, "unknown state preset '" + std::string(name) + "'");
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double fold_angle(double a) {
  constexpr double pi = std::numbers::pi;
  double r = std::remainder(a, 2.0 * pi);  // [-pi, pi]
  if (r <= -pi) r += 2.0 * pi;
  return r;
}

BlochVector bloch_of_projector(const Complex2x2& p, double tol) {
  if (!p.is_finite() || !p.is_hermitian(tol)) {
    throw Error(ErrorCode::kNotProjector, "projector is not Hermitian");
  }
  if (max_abs_diff(p * p, p) > tol || std::abs(p.trace() - 1.0) > tol) {
    throw Error(ErrorCode::kNotProjector, "matrix is not a rank-1 projector");
  }
  return {2.0 * p(0, 1).real(), -2.0 * p(0, 1).imag(), p(0, 0).real() - p(1, 1).real()};
}

BlochVector bloch_of_state(const Ket& v) {
  const Complex cross = std::conj(v[0]) * v[1];
  return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(v[0]) - std::norm(v[1])};
}

SphericalAngles angles_of(const BlochVector& b) {
  const double planar = std::hypot(b.x, b.y);
  SphericalAngles a;
  a.theta = std::atan2(planar, b.z);
  a.phi = planar <= 1e-14 * std::max(1.0, b.norm()) ? 0.0 : fold_angle(std::atan2(b.y, b.x));
  return a;
}

Ket direction_ket(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

Ket antipodal_ket(double theta, double phi) {
  return {-std::polar(std::sin(theta / 2.0), -phi), std::cos(theta / 2.0)};
}

Complex2x2 direction_projector(double theta, double phi) {
  return Complex2x2::projector(direction_ket(theta, phi));
}

}  // namespace povm
