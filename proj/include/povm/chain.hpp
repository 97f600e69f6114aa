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

// N-outcome POVMs from a cascade of N-1 two-outcome measurements. Outcome 1
// of stage l terminates; outcome 2 feeds the next stage.
//   Y_1 = I,  Y_{l+1} = M2^(l) Y_l
//   K_1 = M1^(1),  K_l = W_l M1^(l) Y_l,  K_N = W_N Y_N

#include <optional>
#include <utility>
#include <vector>

#include "povm/gtom.hpp"

namespace povm {

struct ChainConfig {
  std::vector<GtomConfig> stages;
  // Empty, or one entry per stage. A rotation R turns the stage operators
  // into R† M R (wave plates in front of the stage).
  std::vector<std::optional<Complex2x2>> pre_rotations;
};

void validate(const ChainConfig& cfg, double tol = kDefaultTol);

struct ChainStage {
  Complex2x2 m1;
  Complex2x2 m2;
};

struct MultiOutcomePovm {
  std::vector<Complex2x2> k_ops;  // N
  std::vector<Complex2x2> y_ops;  // Y_1 .. Y_N
  std::vector<Complex2x2> w_ops;  // W_1 .. W_N
  std::vector<ChainStage> stages;  // N-1

  std::size_t outcomes() const { return k_ops.size(); }
  std::vector<Complex2x2> effects() const;
};

MultiOutcomePovm build_chain(const ChainConfig& cfg, const BuildOptions& opts = {});

/// Same recursion from explicit stage pairs (PSD, M1†M1 + M2†M2 = I).
MultiOutcomePovm chain_from_stage_operators(const std::vector<ChainStage>& stages,
                                            double tol = kDefaultTol);

/// Tr E_l† E_l' for all pairs.
std::vector<std::vector<double>> povm_gram(const MultiOutcomePovm& povm);
std::vector<std::vector<double>> povm_gram(const std::vector<Complex2x2>& ops);

/// Max-entry error of sum K†K - I.
double completeness_error(const std::vector<Complex2x2>& ops);

/// Largest violation of K_l†K_l + Y_{l+1}†Y_{l+1} = Y_l†Y_l over all stages.
double conservation_error(const MultiOutcomePovm& povm);

}  // namespace povm
