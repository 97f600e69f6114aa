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

#pragma once

#include <string_view>

#include "povm/qmat.hpp"

namespace povm {

/// Pure polarization state c_H|H> + c_V|V>, stored with the canonical global
/// phase: c_H real-nonnegative, or c_V real-positive when c_H = 0.
class PolarizationState {
 public:
  /// Validates |c_H|^2 + |c_V|^2 = 1 within tol, then canonicalises the phase.
  static PolarizationState from_amplitudes(Complex c_h, Complex c_v, double tol = 1e-12);
  /// Normalises any nonzero vector.
  static PolarizationState normalized(const Ket& v);
  /// "H", "V", "D", "A", "R", "L".
  static PolarizationState preset(std::string_view name);

  Complex c_h() const { return c_h_; }
  Complex c_v() const { return c_v_; }
  Ket ket() const { return {c_h_, c_v_}; }

 private:
  PolarizationState(Complex c_h, Complex c_v) : c_h_(c_h), c_v_(c_v) {}
  Complex c_h_;
  Complex c_v_;
};

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

/// Polar and azimuthal angles, theta in [0, pi], phi in (-pi, pi].
struct SphericalAngles {
  double theta = 0.0;
  double phi = 0.0;
};

/// Folds an angle into (-pi, pi].
double fold_angle(double a);

/// (Tr P sx, Tr P sy, Tr P sz). Throws Error(kNotProjector) unless P is a
/// rank-1 Hermitian idempotent within tol.
BlochVector bloch_of_projector(const Complex2x2& p, double tol = 1e-8);
BlochVector bloch_of_state(const Ket& v);
/// phi is reported as 0 on the poles.
SphericalAngles angles_of(const BlochVector& b);

/// cos(theta/2)|H> + e^{i phi} sin(theta/2)|V>, the state with Bloch angles
/// (theta, phi).
Ket direction_ket(double theta, double phi);
/// -e^{-i phi} sin(theta/2)|H> + cos(theta/2)|V>, orthogonal partner.
Ket antipodal_ket(double theta, double phi);
Complex2x2 direction_projector(double theta, double phi);

}  // namespace povm
