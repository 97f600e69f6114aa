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

#include <doctest.h>

#include <cmath>

#include "povm/chain.hpp"
#include "povm/error.hpp"
#include "povm/inverse.hpp"
#include "support/oracles.hpp"

using namespace povm;
using oracle::kPi;

namespace {

GtomConfig projective_hv() {
  GtomConfig g;
  g.sastom.r = 1.0;
  g.r_prime = 1.0;
  return g;
}

ErrorCode code_of(const ChainConfig& c) {
  try {
    build_chain(c);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

}  // namespace

TEST_CASE("single stage reproduces the two-outcome measurement") {
  oracle::Random rng(61);
  for (int i = 0; i < 200; ++i) {
    ChainConfig c;
    c.stages = {rng.gtom()};
    const MultiOutcomePovm p = build_chain(c);
    const GtomResult g = build_gtom(c.stages[0]);
    REQUIRE(p.outcomes() == 2);
    CHECK(max_abs_diff(p.k_ops[0], g.m1) <= 1e-12);
    CHECK(max_abs_diff(p.k_ops[1], g.m2) <= 1e-10);
  }
}

TEST_CASE("two projective stages in the same basis leave a null middle outcome") {
  ChainConfig c;
  c.stages = {projective_hv(), projective_hv()};
  const MultiOutcomePovm p = build_chain(c);
  REQUIRE(p.outcomes() == 3);
  CHECK(max_abs_diff(p.k_ops[0], Complex2x2::diag(1, 0)) <= 1e-15);
  CHECK(max_abs(p.k_ops[1]) <= 1e-15);
  CHECK(max_abs_diff(p.k_ops[2], Complex2x2::diag(0, 1)) <= 1e-15);
  CHECK(completeness_error(p.k_ops) <= 1e-15);

  // rotating the second stage by sigma_x moves the null outcome to the end
  c.pre_rotations = {std::nullopt, Complex2x2::pauli_x()};
  const MultiOutcomePovm q = build_chain(c);
  CHECK(max_abs_diff(q.k_ops[0], Complex2x2::diag(1, 0)) <= 1e-15);
  CHECK(max_abs_diff(q.k_ops[1], Complex2x2::diag(0, 1)) <= 1e-15);
  CHECK(max_abs(q.k_ops[2]) <= 1e-15);
}

TEST_CASE("four-outcome equal-weight chain from the design targets") {
  for (double x : {0.0, 0.5, 1.0}) {
    const MultiOutcomePovm p = build_chain(decompose_povm_to_chain(unbiased_four_outcome_targets(x)));
    REQUIRE(p.outcomes() == 4);
    CHECK(completeness_error(p.k_ops) <= 1e-10);
    for (const Complex2x2& k : p.k_ops) CHECK(std::abs(gram(k).trace().real() - 0.5) <= 1e-8);
    const auto g = povm_gram(p);
    const double off = (1 - x * x / 3) / 8;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i != j) CHECK(std::abs(g[i][j] - off) <= 1e-9);
      }
    }
  }
}

TEST_CASE("gram examples") {
  ChainConfig c;
  c.stages = {projective_hv()};
  const auto g = povm_gram(build_chain(c));
  CHECK(g[0][1] == 0.0);
  CHECK(g[1][0] == 0.0);
  CHECK(g[0][0] == doctest::Approx(1.0));

  GtomConfig s;
  s.sastom = solve_sastom_params({0.6, 1.1, 0.2});
  c.stages = {s};
  const auto h = povm_gram(build_chain(c));
  CHECK(std::abs(h[0][1] - 0.32) <= 1e-12);
}

TEST_CASE("random chains: completeness, conservation, positivity, recursion") {
  oracle::Random rng(62);
  for (int i = 0; i < 300; ++i) {
    const ChainConfig c = rng.chain(8);
    const MultiOutcomePovm p = build_chain(c);
    const std::size_t n = c.stages.size() + 1;
    REQUIRE(p.outcomes() == n);
    REQUIRE(p.y_ops.size() == n);
    REQUIRE(p.w_ops.size() == n);
    CHECK(completeness_error(p.k_ops) <= 1e-10);
    CHECK(conservation_error(p) <= 1e-10);
    for (const Complex2x2& k : p.k_ops) CHECK(k.is_psd(1e-10));
    for (const Complex2x2& w : p.w_ops) CHECK(w.is_unitary(1e-10));

    // Y_l from scratch
    for (std::size_t l = 0; l < n; ++l) {
      Complex2x2 y = Complex2x2::identity();
      for (std::size_t j = 0; j < l; ++j) y = p.stages[j].m2 * y;
      CHECK(max_abs_diff(y, p.y_ops[l]) <= 1e-10);
    }
    // K_l = W_l M1 Y_l and K_N = W_N Y_N
    for (std::size_t l = 0; l + 1 < n; ++l) {
      CHECK(max_abs_diff(p.k_ops[l], p.w_ops[l] * p.stages[l].m1 * p.y_ops[l]) <= 1e-10);
    }
    CHECK(max_abs_diff(p.k_ops[n - 1], p.w_ops[n - 1] * p.y_ops[n - 1]) <= 1e-10);

    // effects against the plain product recursion
    const auto e = oracle::chain_effects(p.stages);
    for (std::size_t l = 0; l < n; ++l) CHECK(max_abs_diff(gram(p.k_ops[l]), e[l]) <= 1e-10);

    // stage operators are the (rotated) GTOM operators
    for (std::size_t l = 0; l + 1 < n; ++l) {
      const GtomResult g = build_gtom(c.stages[l]);
      Complex2x2 m1 = g.m1;
      if (!c.pre_rotations.empty() && c.pre_rotations[l]) {
        m1 = c.pre_rotations[l]->adjoint() * m1 * *c.pre_rotations[l];
      }
      CHECK(max_abs_diff(p.stages[l].m1, m1) <= 1e-12);
    }
  }
}

TEST_CASE("chains through singular branches stay complete") {
  ChainConfig c;
  c.stages = {partial_collapse(0.0, 0.4, 0.1), projective_hv(), partial_collapse(0.3, 1.0, 2.0),
              projective_hv()};
  const MultiOutcomePovm p = build_chain(c);
  CHECK(completeness_error(p.k_ops) <= 1e-10);
  CHECK(conservation_error(p) <= 1e-10);
  for (const Complex2x2& k : p.k_ops) CHECK(k.is_psd(1e-10));
}

TEST_CASE("invalid chain configs") {
  ChainConfig c;
  CHECK(code_of(c) == ErrorCode::kInvalidConfig);
  c.stages = {projective_hv(), projective_hv()};
  c.pre_rotations = {std::nullopt};
  CHECK(code_of(c) == ErrorCode::kInvalidConfig);
  c.pre_rotations = {std::nullopt, Complex2x2::diag(2.0, 1.0)};
  CHECK(code_of(c) == ErrorCode::kInvalidConfig);
  c.pre_rotations.clear();
  c.stages[1].r_prime = 2.0;
  CHECK(code_of(c) == ErrorCode::kInvalidConfig);
}

TEST_CASE("explicit stage operators must be complete") {
  try {
    chain_from_stage_operators({ChainStage{Complex2x2::identity(), Complex2x2::identity()}});
    FAIL("expected IncompleteSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteSet);
  }
}
