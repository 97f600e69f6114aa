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

#include "povm/chain.hpp"

#include <algorithm>

#include "povm/error.hpp"

namespace povm {

void validate(const ChainConfig& cfg, double tol) {
  if (cfg.stages.empty()) throw Error(ErrorCode::kInvalidConfig, "a chain needs at least one stage");
  if (!cfg.pre_rotations.empty() && cfg.pre_rotations.size() != cfg.stages.size()) {
    throw Error(ErrorCode::kInvalidConfig, "preRotations must be empty or match the stage count");
  }
  for (const GtomConfig& s : cfg.stages) validate(s, tol);
  for (const auto& r : cfg.pre_rotations) {
    if (r && !r->is_unitary(tol)) throw Error(ErrorCode::kInvalidConfig, "pre-rotation is not unitary");
  }
}

std::vector<Complex2x2> MultiOutcomePovm::effects() const {
  std::vector<Complex2x2> e;
  e.reserve(k_ops.size());
  for (const Complex2x2& k : k_ops) e.push_back(gram(k));
  return e;
}

MultiOutcomePovm chain_from_stage_operators(const std::vector<ChainStage>& stages, double tol) {
  if (stages.empty()) throw Error(ErrorCode::kInvalidConfig, "a chain needs at least one stage");
  for (const ChainStage& s : stages) {
    if (!s.m1.is_finite() || !s.m2.is_finite()) {
      throw Error(ErrorCode::kNonFinite, "stage operator has non-finite entries");
    }
    if (max_abs_diff(gram(s.m1) + gram(s.m2), Complex2x2::identity()) > tol) {
      throw Error(ErrorCode::kIncompleteSet, "stage operators are not complete");
    }
  }

  MultiOutcomePovm povm;
  povm.stages = stages;
  Complex2x2 y = Complex2x2::identity();
  povm.y_ops.push_back(y);
  for (std::size_t l = 0; l < stages.size(); ++l) {
    if (l == 0) {
      povm.k_ops.push_back(stages[0].m1);
      povm.w_ops.push_back(Complex2x2::identity());
    } else {
      const PolarDecomposition pd = right_polar_decompose(stages[l].m1 * y);
      povm.k_ops.push_back(pd.positive_part);
      povm.w_ops.push_back(pd.unitary_part);
    }
    y = stages[l].m2 * y;
    povm.y_ops.push_back(y);
  }
  const PolarDecomposition last = right_polar_decompose(y);
  povm.k_ops.push_back(last.positive_part);
  povm.w_ops.push_back(last.unitary_part);
  return povm;
}

MultiOutcomePovm build_chain(const ChainConfig& cfg, const BuildOptions& opts) {
  validate(cfg, opts.tol);
  std::vector<ChainStage> stages;
  stages.reserve(cfg.stages.size());
  for (std::size_t l = 0; l < cfg.stages.size(); ++l) {
    const GtomResult g = build_gtom(cfg.stages[l], opts);
    ChainStage s{g.m1, g.m2};
    if (!cfg.pre_rotations.empty() && cfg.pre_rotations[l]) {
      const Complex2x2& r = *cfg.pre_rotations[l];
      s.m1 = r.adjoint() * s.m1 * r;
      s.m2 = r.adjoint() * s.m2 * r;
    }
    stages.push_back(s);
  }
  return chain_from_stage_operators(stages, opts.tol);
}

std::vector<std::vector<double>> povm_gram(const std::vector<Complex2x2>& ops) {
  std::vector<Complex2x2> e;
  for (const Complex2x2& k : ops) e.push_back(gram(k));
  std::vector<std::vector<double>> g(e.size(), std::vector<double>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = 0; j < e.size(); ++j) g[i][j] = hs_inner(e[i], e[j]).real();
  }
  return g;
}

std::vector<std::vector<double>> povm_gram(const MultiOutcomePovm& povm) {
  return povm_gram(povm.k_ops);
}

double completeness_error(const std::vector<Complex2x2>& ops) {
  Complex2x2 sum = Complex2x2::zero();
  for (const Complex2x2& k : ops) sum += gram(k);
  return max_abs_diff(sum, Complex2x2::identity());
}

double conservation_error(const MultiOutcomePovm& povm) {
  double worst = 0.0;
  for (std::size_t l = 0; l + 1 < povm.y_ops.size(); ++l) {
    const Complex2x2 lhs = gram(povm.k_ops[l]) + gram(povm.y_ops[l + 1]);
    worst = std::max(worst, max_abs_diff(lhs, gram(povm.y_ops[l])));
  }
  return worst;
}

}  // namespace povm
