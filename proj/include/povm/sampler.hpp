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

// Born-rule Monte Carlo over constructed measurements.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "povm/chain.hpp"
#include "povm/qubit.hpp"

namespace povm {

/// Philox4x32-10 counter-based generator. The 64-bit seed is the key; the
/// counter holds (draw index, stream id), so every stream is independent and
/// reproducible.
class Philox4x32 {
 public:
  using Block = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;
  static constexpr const char* kAlgorithm = "philox4x32-10";

  static Block generate(Block counter, Key key);

  explicit Philox4x32(std::uint64_t seed = 0, std::uint64_t stream = 0);

  std::uint32_t next_u32();
  std::uint64_t next_u64();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t index_ = 0;
  Block buffer_{};
  int used_ = 4;
};

struct OutcomeRecord {
  std::size_t outcome_index = 0;
  double probability = 0.0;
  std::optional<PolarizationState> post_state;  // empty on a null branch
};

struct ChainRunRecord {
  std::size_t outcome_index = 0;
  int measurements_performed = 0;
  double probability = 0.0;  // product of the stage probabilities on the path
  std::optional<PolarizationState> post_state;
};

/// <psi|M†M|psi> per operator. Throws Error(kIncompleteSet) when sum M†M
/// deviates from I by more than tol.
std::vector<double> born_probabilities(const PolarizationState& state,
                                       const std::vector<Complex2x2>& ops, double tol = 1e-8);

// Every outcome with its probability and post-measurement state.
std::vector<OutcomeRecord> outcome_table(const PolarizationState& state,
                                         const std::vector<Complex2x2>& ops);

OutcomeRecord sample_outcome(const PolarizationState& state, const std::vector<Complex2x2>& ops,
                             Philox4x32& rng);

/// Stage-by-stage simulation of the cascade.
ChainRunRecord run_chain(const PolarizationState& state, const MultiOutcomePovm& chain,
                         Philox4x32& rng);

/// Outcome probabilities obtained as products of stage probabilities.
std::vector<double> chain_path_probabilities(const PolarizationState& state,
                                             const MultiOutcomePovm& chain);

/// sum_k p_k min(k + 1, N - 1) for 0-based outcome k.
double expected_measurement_count(const std::vector<double>& probabilities);

inline constexpr std::size_t kShotsPerStream = 8192;

/// Shot b * kShotsPerStream + i is drawn from stream b.
std::vector<OutcomeRecord> sample_shots(const PolarizationState& state,
                                        const std::vector<Complex2x2>& ops, std::uint64_t seed,
                                        std::size_t shots);
std::vector<ChainRunRecord> run_chain_shots(const PolarizationState& state,
                                            const MultiOutcomePovm& chain, std::uint64_t seed,
                                            std::size_t shots);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

/// Pearson goodness of fit of counts against probabilities. Bins with zero
/// expectation are dropped (an observed count there gives p = 0).
ChiSquareResult chi_square_gof(const std::vector<std::uint64_t>& counts,
                               const std::vector<double>& probabilities);

/// Two-sample homogeneity test on a 2 x k contingency table.
ChiSquareResult chi_square_homogeneity(const std::vector<std::uint64_t>& a,
                                       const std::vector<std::uint64_t>& b);

double chi_square_pvalue(double statistic, int dof);

}  // namespace povm
