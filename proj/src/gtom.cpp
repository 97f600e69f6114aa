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

#include "povm/gtom.hpp"

#include <algorithm>
#include <cmath>

#include "povm/error.hpp"

namespace povm {

namespace {

constexpr double kBoundaryTol = 1e-12;

double expectation(const Complex2x2& a, const Ket& v) { return inner(v, a * v).real(); }

GtomCoefficients coefficients(double epsilon, double complement, double r_prime) {
  const double a = std::sqrt((1.0 + epsilon) / 2.0);
  const double b = std::sqrt(complement / 2.0);
  const double tp = std::sqrt((1.0 - r_prime) * (1.0 + r_prime));
  return {r_prime * a + tp * b, r_prime * b + tp * a, tp * a - r_prime * b, tp * b - r_prime * a};
}

bool gate_condition(double epsilon, double complement, double r_prime) {
  const double tp = std::sqrt((1.0 - r_prime) * (1.0 + r_prime));
  return std::sqrt(complement * (1.0 + epsilon)) <= 2.0 * r_prime * tp;
}

}  // namespace

double GtomConfig::t_prime() const { return std::sqrt((1.0 - r_prime) * (1.0 + r_prime)); }

void validate(const GtomConfig& cfg, double tol) {
  if (!std::isfinite(cfg.r_prime) || cfg.r_prime < 0.0 || cfg.r_prime > 1.0) {
    throw Error(ErrorCode::kInvalidConfig, "rPrime must lie in [0, 1]");
  }
  validate(cfg.sastom, tol);
}

const char* gate_name(CompensationGate g) {
  return g == CompensationGate::kPhaseShift ? "phase-shift" : "identity";
}

GtomCoefficients gtom_coefficients(double epsilon, double r_prime) {
  return coefficients(epsilon, 1.0 - epsilon, r_prime);
}

GtomCoefficients gtom_coefficients(const SastomCharacterization& c, double r_prime) {
  return coefficients(c.epsilon, c.complement, r_prime);
}

bool phase_gate_condition(double epsilon, double r_prime) {
  return gate_condition(epsilon, 1.0 - epsilon, r_prime);
}

bool phase_gate_condition(const SastomCharacterization& c, double r_prime) {
  return gate_condition(c.epsilon, c.complement, r_prime);
}

GtomResult build_gtom(const MeasurementPair& sastom, double r_prime, bool swap_outputs,
                      const BuildOptions& opts) {
  const SastomCharacterization& c = sastom.characterization;
  const double tp = std::sqrt((1.0 - r_prime) * (1.0 + r_prime));
  const Complex2x2 x_add = r_prime * sastom.m1 + tp * sastom.m2;
  const Complex2x2 x_sub = tp * sastom.m1 - r_prime * sastom.m2;
  const PolarDecomposition sub = right_polar_decompose(x_sub);

  GtomResult res;
  res.characterization = c;
  res.s_gate = sub.unitary_part;
  if (swap_outputs) {
    res.x1 = x_sub;
    res.x2 = x_add;
    res.m1 = sub.positive_part;
    res.m2 = x_add;
  } else {
    res.x1 = x_add;
    res.x2 = x_sub;
    res.m1 = x_add;
    res.m2 = sub.positive_part;
  }

  const GtomCoefficients k = gtom_coefficients(c, r_prime);
  const double sp = swap_outputs ? k.sub_plus : k.add_plus;
  const double sq = swap_outputs ? k.sub_minus : k.add_minus;
  res.p = sp * sp;
  res.q = sq * sq;
  res.delta = res.p + res.q - 1.0;

  const Complex s_pp = inner(c.m_plus, res.s_gate * c.m_plus);
  const Complex s_mm = inner(c.m_minus, res.s_gate * c.m_minus);
  res.gate_kind = (s_pp * std::conj(s_mm)).real() < 0.0 ? CompensationGate::kPhaseShift
                                                        : CompensationGate::kIdentity;
  res.phase_gate_predicted = phase_gate_condition(c, r_prime);
  res.on_boundary = std::min(std::abs(k.sub_plus), std::abs(k.sub_minus)) <= kBoundaryTol;

  if (opts.dual_path_check) {
    const Complex2x2 e1 = gram(res.m1);
    const double p_eig = expectation(e1, c.m_plus);
    const double q_eig = expectation(e1, c.m_minus);
    if (std::abs(p_eig - res.p) > opts.tol || std::abs(q_eig - res.q) > opts.tol ||
        std::abs(inner(c.m_plus, e1 * c.m_minus)) > opts.tol) {
      throw Error(ErrorCode::kValidation, "p, q coefficient formulas disagree with M1' spectrum");
    }
    if (!res.on_boundary &&
        res.phase_gate_predicted != (res.gate_kind == CompensationGate::kPhaseShift)) {
      throw Error(ErrorCode::kValidation, "phase-gate condition disagrees with decomposition");
    }
  }
  return res;
}

GtomResult build_gtom(const GtomConfig& cfg, const BuildOptions& opts) {
  validate(cfg, opts.tol);
  return build_gtom(build_sastom(cfg.sastom, opts), cfg.r_prime, cfg.swap_outputs, opts);
}

double indistinguishability(const GtomResult& result) {
  const double v = hs_inner(gram(result.m1), gram(result.m2)).real();
  const double expected = result.p * (1.0 - result.p) + result.q * (1.0 - result.q);
  if (std::abs(v - expected) > 1e-12) {
    throw Error(ErrorCode::kValidation, "Tr E1'E2' differs from p(1-p) + q(1-q)");
  }
  return v;
}

}  // namespace povm
