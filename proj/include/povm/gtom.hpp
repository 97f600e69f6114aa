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

// General two-outcome measurements: the two SASTOM output paths are
// recombined on a second beam splitter with reflection coefficient r'.
//   X1' = r' M1 + t' M2,   X2' = t' M1 - r' M2
// Both are diagonal in the SASTOM eigenbasis, so
//   M1'^2 = p |m+><m+| + q |m-><m-|.

#include "povm/sastom.hpp"

namespace povm {

struct GtomConfig {
  SastomConfig sastom;
  double r_prime = 1.0;
  // Exchanges the two output paths of the second beam splitter, so outcome
  // 1 is the t' M1 - r' M2 port. Without it p + q >= 1 always.
  bool swap_outputs = false;

  double t_prime() const;
};

void validate(const GtomConfig& cfg, double tol = kDefaultTol);

enum class CompensationGate { kIdentity, kPhaseShift };
const char* gate_name(CompensationGate g);

/// Eigenvalues of the port operators in the m+/m- basis:
///   additive port      r'A + t'B,  r'B + t'A
///   subtracting port   t'A - r'B,  t'B - r'A
/// with A = sqrt((1+eps)/2), B = sqrt((1-eps)/2).
struct GtomCoefficients {
  double add_plus = 0.0;
  double add_minus = 0.0;
  double sub_plus = 0.0;
  double sub_minus = 0.0;
};
GtomCoefficients gtom_coefficients(double epsilon, double r_prime);
// Uses the characterisation's 1 - eps, which stays accurate near eps = 1.
GtomCoefficients gtom_coefficients(const SastomCharacterization& c, double r_prime);

/// sqrt(1 - eps^2) <= 2 r' t'
bool phase_gate_condition(double epsilon, double r_prime);
bool phase_gate_condition(const SastomCharacterization& c, double r_prime);

struct GtomResult {
  Complex2x2 m1;
  Complex2x2 m2;
  Complex2x2 x1;  // port operators in outcome order, before compensation
  Complex2x2 x2;
  // Unitary on the subtracting port: its positive part equals s_gate times
  // the port operator. The additive port needs no compensation.
  Complex2x2 s_gate;
  CompensationGate gate_kind = CompensationGate::kIdentity;
  bool phase_gate_predicted = false;
  // One subtracting-port eigenvalue vanishes (|c| <= 1e-12); both gates
  // give the same operator there.
  bool on_boundary = false;
  double p = 1.0;
  double q = 0.0;
  double delta = 0.0;  // p + q - 1
  SastomCharacterization characterization;
};

/// Throws Error(kValidation) with dual_path_check when the coefficient
/// formulas disagree with the eigenvalues of M1'^2, or the predicted gate
/// class disagrees with the decomposition.
GtomResult build_gtom(const GtomConfig& cfg, const BuildOptions& opts = {});
GtomResult build_gtom(const MeasurementPair& sastom, double r_prime, bool swap_outputs,
                      const BuildOptions& opts = {});

/// Tr E1'† E2'. Throws Error(kValidation) if it differs from
/// p(1-p) + q(1-q) by more than 1e-12.
double indistinguishability(const GtomResult& result);

/// Partial-collapse measurement: q = 1, M1'^2 = p|m+><m+| + |m-><m-|, with
/// eps = sqrt(1-p) and r' = sqrt((1-eps)/2). Direction from (theta, phi).
GtomConfig partial_collapse(double p, double theta, double phi);

}  // namespace povm
