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

#include "povm/optics.hpp"

#include <cmath>
#include <numbers>

#include "povm/error.hpp"

namespace povm {

namespace {

double fold_pi(double a) {
  constexpr double pi = std::numbers::pi;
  double r = std::fmod(a, pi);
  if (r < 0.0) r += pi;
  if (r >= pi) r = 0.0;
  return r;
}

}  // namespace

PlateStack PlateStack::normalized() const {
  return {fold_pi(quarter1), fold_pi(half), fold_pi(quarter2)};
}

Complex2x2 wave_plate(double angle, double retardance) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  const Complex2x2 rot{c, s, -s, c};
  const Complex2x2 rot_back{c, -s, s, c};
  return rot_back * Complex2x2::diag(1.0, std::polar(1.0, retardance)) * rot;
}

Complex2x2 quarter_wave_plate(double angle) { return wave_plate(angle, std::numbers::pi / 2.0); }

Complex2x2 half_wave_plate(double angle) { return wave_plate(angle, std::numbers::pi); }

Complex2x2 strip_to_su2(const Complex2x2& u) {
  return u * (1.0 / std::sqrt(u.det()));
}

Complex2x2 plates_to_su2(const PlateStack& stack) {
  const PlateStack s = stack.normalized();
  return strip_to_su2(quarter_wave_plate(s.quarter1) * half_wave_plate(s.half) *
                      quarter_wave_plate(s.quarter2));
}

Complex2x2 rotation_y(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c, -s, s, c};
}

Complex2x2 resolve_unitary(const UnitarySpec& spec) {
  if (const auto* plates = std::get_if<PlateStack>(&spec)) return plates_to_su2(*plates);
  return std::get<Complex2x2>(spec);
}

double SastomConfig::t() const { return std::sqrt((1.0 - r) * (1.0 + r)); }

void validate(const SastomConfig& cfg, double tol) {
  if (!std::isfinite(cfg.r) || cfg.r < 0.0 || cfg.r > 1.0) {
    throw Error(ErrorCode::kInvalidConfig, "reflection coefficient r must lie in [0, 1]");
  }
  for (const auto* spec : {&cfg.u1, &cfg.u2}) {
    if (const auto* plates = std::get_if<PlateStack>(spec)) {
      if (!std::isfinite(plates->quarter1) || !std::isfinite(plates->half) ||
          !std::isfinite(plates->quarter2)) {
        throw Error(ErrorCode::kInvalidConfig, "plate angles must be finite");
      }
      continue;
    }
    const Complex2x2& u = std::get<Complex2x2>(*spec);
    if (!u.is_finite() || !u.is_unitary(tol)) {
      throw Error(ErrorCode::kInvalidConfig, "wave-plate unitary is not unitary");
    }
    if (std::abs(u.det() - 1.0) > tol) {
      throw Error(ErrorCode::kInvalidConfig, "wave-plate unitary must have determinant 1");
    }
  }
}

Complex overlap_w(const SastomConfig& cfg) {
  const Complex2x2 u1 = resolve_unitary(cfg.u1);
  const Complex2x2 u2 = resolve_unitary(cfg.u2);
  return (u1.adjoint() * u2)(0, 1);
}

BranchOperators interferometer_branches(const SastomConfig& cfg) {
  validate(cfg);
  const Complex2x2 u1 = resolve_unitary(cfg.u1);
  const Complex2x2 u2 = resolve_unitary(cfg.u2);
  const double r = cfg.r;
  const double t = cfg.t();
  // U|H><H| keeps the first column of U, U|V><V| the second.
  const Complex2x2 x1{r * u1(0, 0), t * u2(0, 1), r * u1(1, 0), t * u2(1, 1)};
  const Complex2x2 x2{t * u1(0, 0), -r * u2(0, 1), t * u1(1, 0), -r * u2(1, 1)};
  return {x1, x2};
}

SastomConfig gauge_fixed_config(double r, Complex w) {
  const double a = std::sqrt(std::max(0.0, (1.0 - std::abs(w)) * (1.0 + std::abs(w))));
  SastomConfig cfg;
  cfg.r = r;
  cfg.u1 = Complex2x2::identity();
  cfg.u2 = Complex2x2{a, w, -std::conj(w), a};
  return cfg;
}

SastomConfig iinuma_config(double eta) {
  SastomConfig cfg;
  cfg.r = std::numbers::sqrt2 / 2.0;
  cfg.u1 = rotation_y(2.0 * eta);
  cfg.u2 = rotation_y(-2.0 * eta);
  return cfg;
}

}  // namespace povm
