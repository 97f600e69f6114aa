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

// From target measurement characteristics back to interferometer settings.

#include <vector>

#include "povm/chain.hpp"
#include "povm/gtom.hpp"

namespace povm {

struct SastomTarget {
  double epsilon = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

struct GtomTarget {
  double p = 1.0;
  double q = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

inline constexpr double kRoundTripTol = 1e-8;

/// Gauge-fixed (U1 = I) interferometer reproducing the target. r is found by
/// bracketed root finding on [sqrt((1-eps)/2), sqrt((1+eps)/2)] with |w|
/// eliminated through the strength relation. Throws Error(kOutOfRange) on an
/// invalid target and Error(kNoSolution) if the forward model misses it by
/// more than 1e-8.
SastomConfig solve_sastom_params(const SastomTarget& target);

/// Throws Error(kNoSolution) for p + q < 1 unless allow_output_swap, in
/// which case the swapped-output configuration is returned.
GtomConfig solve_gtom_params(const GtomTarget& target, bool allow_output_swap = false);

/// Splits a complete set of measurement operators into a cascade. Throws
/// Error(kIncompleteSet) when the set is not complete within 1e-8 and
/// Error(kSingularStage) when an operator reaches outside the image left by
/// the earlier stages.
ChainConfig decompose_povm_to_chain(const std::vector<Complex2x2>& targets);

/// Four-outcome design with E_l = (I + x n_l . sigma)/4 along the tetrahedron
/// vertices n_l, x in [0, 1]. Every Tr E_l = 1/2 and all off-diagonal
/// Hilbert-Schmidt overlaps equal (1 - x^2/3)/8. Returns K_l = E_l^{1/2}.
std::vector<Complex2x2> unbiased_four_outcome_targets(double x);

}  // namespace povm
