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

#include "povm/sastom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "povm/error.hpp"
#include "povm/qubit.hpp"

namespace povm {

double sastom_epsilon(double r, double abs_w) {
  const double t2 = (1.0 - r) * (1.0 + r);
  return std::sqrt(std::max(0.0, 1.0 - 4.0 * r * r * t2 * (1.0 - abs_w * abs_w)));
}

SastomCharacterization characterize_sastom(double r, Complex w) {
  const double aw = std::abs(w);
  return characterize_sastom(r, w, (1.0 - aw) * (1.0 + aw));
}

SastomCharacterization characterize_sastom(double r, Complex w, double w_complement) {
  const double t = std::sqrt((1.0 - r) * (1.0 + r));
  const double r2 = r * r;
  const double t2 = t * t;
  const double coupling = 2.0 * r * t * std::abs(w);  // 2rt|w|

  SastomCharacterization c;
  c.w = w;
  // eps^2 = (r^2 - t^2)^2 + 4 r^2 t^2 |w|^2, the same quantity as
  // 1 - 4 r^2 t^2 (1 - |w|^2) without the cancellation near eps = 0.
  c.epsilon = std::min(1.0, std::hypot(r2 - t2, coupling));
  // 1 - eps = (1 - eps^2) / (1 + eps) = 4 r^2 t^2 (1 - |w|^2) / (1 + eps)
  c.complement = std::clamp(4.0 * r2 * t2 * std::max(0.0, w_complement) / (1.0 + c.epsilon), 0.0, 1.0);

  if (coupling == 0.0) {
    if (r2 >= t2) {
      c.m_plus = {1.0, 0.0};
      c.m_minus = {0.0, 1.0};
      c.theta = 0.0;
    } else {
      c.m_plus = {0.0, 1.0};
      c.m_minus = {-1.0, 0.0};
      c.theta = std::numbers::pi;
    }
    c.phi = 0.0;
    if (c.epsilon == 0.0) c.theta = std::numbers::pi / 2.0;
    return c;
  }

  // tan(theta/2) = (t^2 - r^2 + eps) / (2rt|w|) = 2rt|w| / (r^2 - t^2 + eps)
  c.theta = r2 >= t2 ? 2.0 * std::atan2(coupling, r2 - t2 + c.epsilon)
                     : 2.0 * std::atan2(t2 - r2 + c.epsilon, coupling);
  c.phi = fold_angle(-std::arg(w));
  c.m_plus = direction_ket(c.theta, c.phi);
  c.m_minus = antipodal_ket(c.theta, c.phi);
  return c;
}

SastomCharacterization characterize_sastom(const SastomConfig& cfg) {
  validate(cfg);
  const Complex2x2 u = resolve_unitary(cfg.u1).adjoint() * resolve_unitary(cfg.u2);
  return characterize_sastom(cfg.r, u(0, 1), std::norm(u(1, 1)));
}

Complex2x2 diagonal_in(const Ket& m_plus, const Ket& m_minus, double a, double b) {
  return a * Complex2x2::projector(m_plus) + b * Complex2x2::projector(m_minus);
}

std::pair<Complex2x2, Complex2x2> sastom_operators(const SastomCharacterization& c) {
  const double hi = std::sqrt((1.0 + c.epsilon) / 2.0);
  const double lo = std::sqrt(c.complement / 2.0);
  return {diagonal_in(c.m_plus, c.m_minus, hi, lo), diagonal_in(c.m_plus, c.m_minus, lo, hi)};
}

MeasurementPair build_sastom(const SastomConfig& cfg, const BuildOptions& opts) {
  const BranchOperators x = interferometer_branches(cfg);
  const PolarDecomposition p1 = right_polar_decompose(x.x1);
  const PolarDecomposition p2 = right_polar_decompose(x.x2);

  MeasurementPair pair{p1.positive_part, p2.positive_part, p1.unitary_part, p2.unitary_part,
                       characterize_sastom(cfg)};
  if (opts.dual_path_check) {
    const auto [a1, a2] = sastom_operators(pair.characterization);
    if (max_abs_diff(a1, pair.m1) > opts.tol || max_abs_diff(a2, pair.m2) > opts.tol) {
      throw Error(ErrorCode::kValidation,
                  "polar-decomposition and analytic SASTOM operators disagree");
    }
  }
  return pair;
}

MeasurementPair sastom_from_strength(double epsilon, double theta, double phi) {
  constexpr double pi = std::numbers::pi;
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "epsilon must lie in [0, 1]");
  }
  if (!(theta >= 0.0 && theta <= pi)) throw Error(ErrorCode::kOutOfRange, "theta must lie in [0, pi]");
  if (!(phi > -pi && phi <= pi)) throw Error(ErrorCode::kOutOfRange, "phi must lie in (-pi, pi]");

  SastomCharacterization c;
  c.epsilon = epsilon;
  c.complement = 1.0 - epsilon;
  c.theta = theta;
  c.phi = phi;
  c.m_plus = direction_ket(theta, phi);
  c.m_minus = antipodal_ket(theta, phi);
  // Interferometer realising it with U1 = I: r^2 - t^2 = eps cos(theta),
  // 2rt|w| = eps sin(theta), arg w = -phi.
  const double r2 = 0.5 * (1.0 + epsilon * std::cos(theta));
  const double rt2 = 2.0 * std::sqrt(r2 * (1.0 - r2));
  c.w = rt2 > 0.0 ? std::polar(std::min(1.0, epsilon * std::sin(theta) / rt2), -phi) : 0.0;

  const auto [m1, m2] = sastom_operators(c);
  return {m1, m2, Complex2x2::identity(), Complex2x2::identity(), c};
}

}  // namespace povm
