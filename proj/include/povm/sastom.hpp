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

// Symmetric arbitrary-strength two-outcome measurements:
//   M1 = sqrt((1+eps)/2)|m+><m+| + sqrt((1-eps)/2)|m-><m-|
//   M2 = sqrt((1-eps)/2)|m+><m+| + sqrt((1+eps)/2)|m-><m-|

#include "povm/optics.hpp"
#include "povm/qmat.hpp"

namespace povm {

struct BuildOptions {
#ifdef NDEBUG
  bool dual_path_check = false;
#else
  bool dual_path_check = true;
#endif
  double tol = kDefaultTol;
};

struct SastomCharacterization {
  double epsilon = 0.0;
  // 1 - epsilon, carried on its own: near eps = 1 it cannot be recovered
  // from epsilon, and sqrt((1 - eps)/2) is what the operators need.
  double complement = 1.0;
  Complex w = 0.0;
  double theta = 0.0;  // Bloch polar angle of |m+><m+|
  double phi = 0.0;    // Bloch azimuth of |m+><m+|, = -arg(w)
  Ket m_plus{1.0, 0.0};
  Ket m_minus{0.0, 1.0};
};

struct MeasurementPair {
  Complex2x2 m1;
  Complex2x2 m2;
  Complex2x2 v1;  // compensation unitaries, X_n = V_n† M_n
  Complex2x2 v2;
  SastomCharacterization characterization;
};

/// The strength formula written as sqrt(1 - 4 r^2 t^2 (1 - |w|^2)).
double sastom_epsilon(double r, double abs_w);

/// Characterisation from (r, w) alone.
SastomCharacterization characterize_sastom(double r, Complex w);
/// w_complement = 1 - |w|^2, e.g. |<V|U1† U2|V>|^2 taken from the unitaries.
SastomCharacterization characterize_sastom(double r, Complex w, double w_complement);
SastomCharacterization characterize_sastom(const SastomConfig& cfg);

/// a|m+><m+| + b|m-><m-|
Complex2x2 diagonal_in(const Ket& m_plus, const Ket& m_minus, double a, double b);

/// M1, M2 written directly from a characterisation.
std::pair<Complex2x2, Complex2x2> sastom_operators(const SastomCharacterization& c);

/// Positive parts of the interferometer branch operators, with the
/// compensation unitaries extracted. With dual_path_check the result is
/// compared against sastom_operators() and Error(kValidation) is thrown on
/// disagreement.
MeasurementPair build_sastom(const SastomConfig& cfg, const BuildOptions& opts = {});

/// Builds the pair in the (theta, phi) eigenbasis; V1 = V2 = I.
MeasurementPair sastom_from_strength(double epsilon, double theta, double phi);

}  // namespace povm
