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

// Forward models of the linear-optical elements: wave-plate gadgets, the
// polarizing beam splitter + beam splitter interferometer and its branch
// operators. Single-photon, loss-free.

#include <variant>

#include "povm/qmat.hpp"

namespace povm {

/// Fast-axis orientations (radians) of a quarter-half-quarter plate stack.
struct PlateStack {
  double quarter1 = 0.0;
  double half = 0.0;
  double quarter2 = 0.0;

  /// Angles folded into [0, pi). Plates are invariant under a rotation by pi.
  PlateStack normalized() const;
};

/// Jones matrix of a linear retarder with fast axis at `angle` and
/// retardance `retardance` (pi/2 quarter-wave, pi half-wave).
Complex2x2 wave_plate(double angle, double retardance);
Complex2x2 quarter_wave_plate(double angle);
Complex2x2 half_wave_plate(double angle);

/// Removes the global phase of a unitary so that det = 1.
Complex2x2 strip_to_su2(const Complex2x2& u);

/// quarter(q1) * half(h) * quarter(q2), global phase stripped.
Complex2x2 plates_to_su2(const PlateStack& stack);

/// exp(-i angle sigma_y), the polarisation rotator used by the Iinuma preset.
Complex2x2 rotation_y(double angle);

using UnitarySpec = std::variant<PlateStack, Complex2x2>;

Complex2x2 resolve_unitary(const UnitarySpec& spec);

struct SastomConfig {
  double r = 1.0;  // beam-splitter reflection coefficient
  UnitarySpec u1 = Complex2x2::identity();
  UnitarySpec u2 = Complex2x2::identity();

  /// sqrt(1 - r^2)
  double t() const;
};

/// Throws Error(kInvalidConfig) when r is outside [0, 1] or a unitary is not
/// in SU(2) within tol.
void validate(const SastomConfig& cfg, double tol = kDefaultTol);

/// w = <H| U1† U2 |V>
Complex overlap_w(const SastomConfig& cfg);

struct BranchOperators {
  Complex2x2 x1;
  Complex2x2 x2;
};

/// X1 = r U1|H><H| + t U2|V><V|,  X2 = t U1|H><H| - r U2|V><V|.
BranchOperators interferometer_branches(const SastomConfig& cfg);

/// Gauge-fixed interferometer (U1 = I) realising a given w: U2 is the SU(2)
/// element with <H|U2|V> = w.
SastomConfig gauge_fixed_config(double r, Complex w);

/// Iinuma preset: r = 1/sqrt2, U1 = exp(-2i eta sy), U2 = exp(2i eta sy).
SastomConfig iinuma_config(double eta);

}  // namespace povm
