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

// Measurements of a qubit through an ancilla (alpha|0> + beta|1>) and a
// partial CNOT  U = |+><+| (x) I + |-><-| (x) exp(i xi tau_x), reading the
// ancilla out in {|0>, |1>}. Operators are written in the measured qubit's
// {|+>, |->} basis, stored as the first and second basis vectors.

#include <array>

#include "povm/optics.hpp"
#include "povm/qmat.hpp"

namespace povm {

struct SolidStateConfig {
  double alpha = 1.0;
  double xi = 1.5707963267948966;

  double beta() const;
};

void validate(const SolidStateConfig& cfg);

struct SolidStateResult {
  Complex2x2 m0;
  Complex2x2 m1;
  Complex2x2 correction0;  // X_a = correction_a† M_a
  Complex2x2 correction1;
  Complex2x2 x0;
  Complex2x2 x1;
  double alpha_prime = 0.0;
};

/// sqrt((1 - (2 alpha^2 - 1) cos 2xi) / 2)
double alpha_prime(double alpha, double xi);

/// X0 = alpha|+><+| + (alpha cos xi + i beta sin xi)|-><-|
/// X1 = beta|+><+|  + (i alpha sin xi + beta cos xi)|-><-|
BranchOperators partial_cnot_branches(const SolidStateConfig& cfg);

using TwoQubitState = std::array<Complex, 4>;  // index 2*system + ancilla

/// Branch operators read off by running the gate on explicit two-qubit
/// state vectors.
BranchOperators partial_cnot_circuit(const SolidStateConfig& cfg);

/// M0 = alpha|+><+| + sqrt(1 - alpha'^2)|-><-|, M1 = beta|+><+| + alpha'|-><-|,
/// with corrections from the polar decompositions of X0, X1.
SolidStateResult partial_cnot_measurement(const SolidStateConfig& cfg);
SolidStateResult cnot_measurement(double alpha);

}  // namespace povm
