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
#include <set>

#include "povm/error.hpp"
#include "povm/inverse.hpp"
#include "povm/sampler.hpp"
#include "support/oracles.hpp"

using namespace povm;
using oracle::kPi;

namespace {

std::vector<Complex2x2> hv() { return {Complex2x2::diag(1, 0), Complex2x2::diag(0, 1)}; }

std::vector<Complex2x2> sastom_ops(double eps, double theta, double phi) {
  const MeasurementPair p = sastom_from_strength(eps, theta, phi);
  return {p.m1, p.m2};
}

MultiOutcomePovm uniform_four() {
  return build_chain(decompose_povm_to_chain(unbiased_four_outcome_targets(0.0)));
}

}  // namespace

TEST_CASE("philox4x32-10 known answers") {
  using B = Philox4x32::Block;
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        B{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        B{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("generator streams") {
  Philox4x32 g(0, 0);
  for (std::uint32_t w : {0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u}) CHECK(g.next_u32() == w);
  const auto b1 = Philox4x32::generate({1, 0, 0, 0}, {0, 0});
  CHECK(g.next_u32() == b1[0]);

  Philox4x32 k(0x0000000500000007ull, 0x0000000900000003ull);
  const auto kb = Philox4x32::generate({0, 0, 3, 9}, {7, 5});
  CHECK(k.next_u32() == kb[0]);
  CHECK(k.next_u32() == kb[1]);

  Philox4x32 a(42, 1), b(42, 1), c(42, 2);
  std::set<double> seen;
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(u == b.uniform());
    seen.insert(u);
    seen.insert(c.uniform());
  }
  CHECK(seen.size() == 2000);
}

TEST_CASE("born probability examples") {
  const auto h = PolarizationState::preset("H");
  const auto p = born_probabilities(h, hv());
  CHECK(p[0] == 1.0);
  CHECK(p[1] == 0.0);
  const auto q = born_probabilities(h, sastom_ops(0.6, 0.0, 0.0));
  CHECK(std::abs(q[0] - 0.8) <= 1e-12);
  CHECK(std::abs(q[1] - 0.2) <= 1e-12);

  oracle::Random rng(81);
  for (int i = 0; i < 200; ++i) {
    const auto s = PolarizationState::normalized(rng.ket());
    const auto z = born_probabilities(s, sastom_ops(0.0, rng.uniform(0, kPi), rng.uniform(-kPi, kPi)));
    CHECK(std::abs(z[0] - 0.5) <= 1e-12);
    CHECK(std::abs(z[1] - 0.5) <= 1e-12);
    const ChainConfig c = rng.chain(8);
    const auto e = born_probabilities(s, build_chain(c).k_ops);
    double sum = 0.0;
    for (double v : e) sum += v;
    CHECK(std::abs(sum - 1.0) <= 1e-10);
  }
}

TEST_CASE("incomplete sets are rejected") {
  const auto h = PolarizationState::preset("H");
  const std::vector<Complex2x2> bad{Complex2x2::diag(1, 0)};
  Philox4x32 rng(1);
  try {
    born_probabilities(h, bad);
    FAIL("expected IncompleteSet");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIncompleteSet);
  }
  CHECK_THROWS_AS(sample_outcome(h, bad, rng), Error);
  CHECK_THROWS_AS(sample_shots(h, {}, 0, 10), Error);
}

TEST_CASE("sampling records") {
  const auto h = PolarizationState::preset("H");
  Philox4x32 rng(42);
  for (int i = 0; i < 100; ++i) {
    const OutcomeRecord r = sample_outcome(h, hv(), rng);
    CHECK(r.outcome_index == 0);
    CHECK(r.probability == 1.0);
    REQUIRE(r.post_state);
    CHECK(std::abs(r.post_state->c_h()) == doctest::Approx(1.0));
  }

  Philox4x32 a(42), b(42);
  const auto ops = sastom_ops(0.6, 1.0, 0.3);
  const auto d = PolarizationState::preset("D");
  for (int i = 0; i < 100; ++i) {
    const OutcomeRecord x = sample_outcome(d, ops, a);
    const OutcomeRecord y = sample_outcome(d, ops, b);
    CHECK(x.outcome_index == y.outcome_index);
    CHECK(x.probability == y.probability);
    // post state is M|psi> normalised
    const Ket v = ops[x.outcome_index] * d.ket();
    CHECK(std::abs(x.probability - (std::norm(v[0]) + std::norm(v[1]))) <= 1e-12);
    CHECK(max_abs_diff(Complex2x2::projector(x.post_state->ket()),
                       Complex2x2::projector(scale(v, 1.0 / std::sqrt(x.probability)))) <= 1e-12);
  }
}

TEST_CASE("zero-probability outcomes carry a null branch") {
  const std::vector<Complex2x2> ops{Complex2x2::diag(1, 0), Complex2x2::zero(), Complex2x2::diag(0, 1)};
  const auto t = outcome_table(PolarizationState::preset("H"), ops);
  REQUIRE(t.size() == 3);
  CHECK(t[0].post_state.has_value());
  CHECK(t[0].probability == 1.0);
  CHECK_FALSE(t[1].post_state.has_value());
  CHECK_FALSE(t[2].post_state.has_value());
  CHECK(t[2].probability == 0.0);

  // zero-probability outcomes are never drawn
  for (const auto& s : sample_shots(PolarizationState::preset("V"), ops, 3, 500)) {
    CHECK(s.outcome_index == 2);
    CHECK(s.post_state.has_value());
  }
  Philox4x32 rng(0);
  for (int i = 0; i < 100; ++i) CHECK(sample_outcome(PolarizationState::preset("H"), ops, rng).outcome_index == 0);
}

TEST_CASE("chain runs on a partial-collapse chain report null branches") {
  ChainConfig cc;
  GtomConfig proj;
  proj.sastom.r = 1.0;
  cc.stages = {proj, proj};
  const MultiOutcomePovm p = build_chain(cc);
  Philox4x32 rng(5);
  const ChainRunRecord r = run_chain(PolarizationState::preset("V"), p, rng);
  CHECK(r.outcome_index == 2);
  CHECK(r.measurements_performed == 2);
  CHECK(r.probability == doctest::Approx(1.0));
  REQUIRE(r.post_state);

  // stopping at stage one on |D> and then the null middle branch never fires
  std::vector<std::uint64_t> counts(3, 0);
  for (const auto& s : run_chain_shots(PolarizationState::preset("D"), p, 9, 2000)) ++counts[s.outcome_index];
  CHECK(counts[1] == 0);
  CHECK(counts[0] + counts[2] == 2000);
}

TEST_CASE("chain runs: topology and applied operators") {
  oracle::Random rng(82);
  for (int i = 0; i < 100; ++i) {
    const ChainConfig c = rng.chain(8);
    const MultiOutcomePovm p = build_chain(c);
    const std::size_t n = p.outcomes();
    const auto s = PolarizationState::normalized(rng.ket());
    Philox4x32 g(i);
    for (int k = 0; k < 20; ++k) {
      const ChainRunRecord r = run_chain(s, p, g);
      CHECK(r.measurements_performed == static_cast<int>(std::min(r.outcome_index + 1, n - 1)));
      CHECK(r.measurements_performed >= 1);
      const Ket v = p.k_ops[r.outcome_index] * s.ket();
      const double pk = std::norm(v[0]) + std::norm(v[1]);
      CHECK(std::abs(r.probability - pk) <= 1e-10);
      REQUIRE(r.post_state);
      CHECK(max_abs_diff(Complex2x2::projector(r.post_state->ket()),
                         Complex2x2::projector(scale(v, 1.0 / std::sqrt(pk)))) <= 1e-8);
    }
    // path probabilities equal the direct Born probabilities
    const auto a = chain_path_probabilities(s, p);
    const auto b = born_probabilities(s, p.k_ops);
    for (std::size_t l = 0; l < n; ++l) CHECK(std::abs(a[l] - b[l]) <= 1e-10);
  }
}

TEST_CASE("two-outcome chains always take one measurement") {
  ChainConfig c;
  c.stages = {GtomConfig{}};
  c.stages[0].sastom = solve_sastom_params({0.6, 0.4, 0.0});
  const MultiOutcomePovm p = build_chain(c);
  for (const auto& r : run_chain_shots(PolarizationState::preset("R"), p, 11, 500)) {
    CHECK(r.measurements_performed == 1);
  }
}

TEST_CASE("no-terminate path applies Y") {
  oracle::Random rng(83);
  for (int i = 0; i < 100; ++i) {
    const MultiOutcomePovm p = build_chain(rng.chain(8));
    for (std::size_t l = 1; l < p.y_ops.size(); ++l) {
      CHECK(max_abs_diff(p.stages[l - 1].m2 * p.y_ops[l - 1], p.y_ops[l]) <= 1e-10);
    }
  }
  const MultiOutcomePovm u = uniform_four();
  CHECK(max_abs_diff(u.stages[1].m2 * u.stages[0].m2, u.y_ops[2]) <= 1e-10);
}

TEST_CASE("frequency band for the 0.8 / 0.2 split") {
  const auto shots = sample_shots(PolarizationState::preset("H"), sastom_ops(0.6, 0.0, 0.0), 42, 100000);
  std::size_t zero = 0;
  for (const auto& s : shots) zero += s.outcome_index == 0;
  const double f = static_cast<double>(zero) / 1e5;
  CHECK(f >= 0.796);
  CHECK(f <= 0.804);
  // batch-parallel determinism
  const auto again = sample_shots(PolarizationState::preset("H"), sastom_ops(0.6, 0.0, 0.0), 42, 100000);
  for (std::size_t i = 0; i < shots.size(); ++i) REQUIRE(shots[i].outcome_index == again[i].outcome_index);
  // a longer run agrees on its prefix
  const auto prefix = sample_shots(PolarizationState::preset("H"), sastom_ops(0.6, 0.0, 0.0), 42, 9000);
  for (std::size_t i = 0; i < prefix.size(); ++i) REQUIRE(prefix[i].outcome_index == shots[i].outcome_index);
}

TEST_CASE("uniform four-outcome chain: mean count and stage-vs-direct agreement") {
  const MultiOutcomePovm p = build_chain(decompose_povm_to_chain(unbiased_four_outcome_targets(0.0)));
  const auto s = PolarizationState::preset("D");
  const auto probs = born_probabilities(s, p.k_ops);
  for (double v : probs) CHECK(std::abs(v - 0.25) <= 1e-10);
  CHECK(std::abs(expected_measurement_count(probs) - 2.25) <= 1e-12);

  const std::size_t n = 100000;
  const auto runs = run_chain_shots(s, p, 7, n);
  double mean = 0.0, sq = 0.0;
  std::vector<std::uint64_t> staged(4, 0), direct(4, 0);
  for (const auto& r : runs) {
    mean += r.measurements_performed;
    sq += double(r.measurements_performed) * r.measurements_performed;
    ++staged[r.outcome_index];
  }
  mean /= n;
  const double var = 0.25 * 1 + 0.25 * 4 + 0.5 * 9 - 2.25 * 2.25;
  CHECK(std::abs(mean - 2.25) <= 3 * std::sqrt(var / n));
  for (const auto& r : sample_shots(s, p.k_ops, 8, n)) ++direct[r.outcome_index];
  CHECK(chi_square_homogeneity(staged, direct).p_value > 1e-3);
  CHECK(chi_square_gof(staged, probs).p_value > 1e-3);
}

TEST_CASE("expected measurement count") {
  CHECK(expected_measurement_count({1.0}) == 1.0);
  CHECK(expected_measurement_count({0.4, 0.6}) == 1.0);
  CHECK(std::abs(expected_measurement_count({0.5, 0.25, 0.25}) - (0.5 + 0.5 * 2)) <= 1e-15);
}

TEST_CASE("chi-square statistics") {
  // dof 2 has the closed form exp(-x/2)
  for (double x : {0.1, 1.0, 5.991464547107979, 20.0}) {
    CHECK(std::abs(chi_square_pvalue(x, 2) - std::exp(-x / 2)) <= 1e-14);
  }
  // dof 1: erfc(sqrt(x/2))
  for (double x : {0.5, 3.841458820694124, 10.0}) {
    CHECK(std::abs(chi_square_pvalue(x, 1) - std::erfc(std::sqrt(x / 2))) <= 1e-14);
  }
  CHECK(chi_square_pvalue(3.0, 0) == 1.0);

  const ChiSquareResult g = chi_square_gof({50, 30, 20}, {0.5, 0.3, 0.2});
  CHECK(g.statistic == 0.0);
  CHECK(g.dof == 2);
  CHECK(g.p_value == 1.0);
  const ChiSquareResult h = chi_square_gof({60, 40}, {0.5, 0.5});
  CHECK(std::abs(h.statistic - 4.0) <= 1e-12);
  CHECK(h.dof == 1);
  // counts where the model says zero are fatal
  CHECK(chi_square_gof({5, 1}, {1.0, 0.0}).p_value == 0.0);
  CHECK(chi_square_gof({5, 0}, {1.0, 0.0}).dof == 0);

  const ChiSquareResult k = chi_square_homogeneity({10, 20}, {20, 40});
  CHECK(std::abs(k.statistic) <= 1e-12);
  CHECK(k.dof == 1);
  CHECK_THROWS_AS(chi_square_gof({1, 2}, {1.0}), Error);
}
