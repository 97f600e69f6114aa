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

#include "povm/inverse.hpp"

#include <algorithm>
#include <cfloat>
#include <limits>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "povm/error.hpp"
#include "povm/qubit.hpp"

namespace povm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxIterations = 200;

void check_direction(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kPi)) throw Error(ErrorCode::kOutOfRange, "theta must lie in [0, pi]");
  if (!std::isfinite(phi)) throw Error(ErrorCode::kOutOfRange, "phi must be finite");
}

void check_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, std::string(name) + " must lie in [0, 1]");
  }
}

// |w| for a given r and target strength, from eps^2 = 1 - 4r^2t^2(1 - |w|^2).
double abs_w_for(double r, double epsilon) {
  const double den = 4.0 * r * r * (1.0 - r) * (1.0 + r);
  if (den <= 0.0) return 0.0;
  const double w2 = 1.0 - (1.0 - epsilon) * (1.0 + epsilon) / den;
  return std::sqrt(std::clamp(w2, 0.0, 1.0));
}

SastomConfig config_at(double r, double epsilon, double phi) {
  return gauge_fixed_config(r, std::polar(abs_w_for(r, epsilon), -phi));
}

std::string residual_text(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

SastomConfig solve_sastom_params(const SastomTarget& target) {
  check_unit(target.epsilon, "epsilon");
  check_direction(target.theta, target.phi);
  const double eps = target.epsilon;
  const double phi = fold_angle(target.phi);
  if (eps == 0.0) return gauge_fixed_config(std::numbers::sqrt2 / 2.0, 0.0);

  // theta(r) falls from pi at the lower end of the bracket to 0 at the top.
  auto f = [&](double r) { return characterize_sastom(config_at(r, eps, phi)).theta - target.theta; };
  double a = std::sqrt((1.0 - eps) / 2.0);
  double b = std::sqrt((1.0 + eps) / 2.0);
  double fa = f(a);
  double fb = f(b);
  double r = std::abs(fa) <= std::abs(fb) ? a : b;

  if (fa != 0.0 && fb != 0.0) {
    int side = 0;
    for (int it = 0; it < kMaxIterations; ++it) {
      double c = b - fb * (b - a) / (fb - fa);
      // bisect when the secant leaves the bracket or stalls on one side
      if (!(c > a && c < b) || std::abs(side) > 2) {
        c = 0.5 * (a + b);
        side = 0;
      }
      const double fc = f(c);
      r = c;
      if (fc == 0.0 || b - a <= 4.0 * DBL_EPSILON) break;
      if ((fc > 0.0) == (fa > 0.0)) {
        a = c;
        fa = fc;
        side = side > 0 ? side + 1 : 1;
      } else {
        b = c;
        fb = fc;
        side = side < 0 ? side - 1 : -1;
      }
    }
  }

  auto residual_of = [&](const SastomConfig& c) {
    const SastomCharacterization got = characterize_sastom(c);
    return std::max({std::abs(got.epsilon - eps), std::abs(got.theta - target.theta),
                     std::sin(target.theta) * std::abs(fold_angle(got.phi - phi))});
  };
  SastomConfig cfg = config_at(r, eps, phi);
  double residual = residual_of(cfg);
  // Near the poles theta ~ sqrt(eps - (r^2 - t^2)), so a float r pins theta
  // only to ~1e-8. Re-deriving |w| from 2 r t |w| = eps sin(theta) at the
  // found r recovers full precision there.
  const double rt2 = 2.0 * r * std::sqrt((1.0 - r) * (1.0 + r));
  if (rt2 > 0.0) {
    const double w = eps * std::sin(target.theta) / rt2;
    if (w <= 1.0) {
      const SastomConfig alt = gauge_fixed_config(r, std::polar(w, -phi));
      const double res_alt = residual_of(alt);
      if (res_alt < residual) {
        cfg = alt;
        residual = res_alt;
      }
    }
  }
  if (!(residual <= kRoundTripTol)) {
    throw Error(ErrorCode::kNoSolution, "SASTOM solve missed the target, residual " + residual_text(residual));
  }
  return cfg;
}

namespace {

struct Splitting {
  double epsilon;
  double r_prime;
};

// All (eps, r') branches of sqrt(P) = cos(gamma - beta), sqrt(Q) = sin(gamma + beta)
// with eps = cos(2 beta), r' = cos(gamma). Degenerate (eps = 0) ones go last.
std::vector<Splitting> split_unswapped(double P, double Q) {
  constexpr double slack = 1e-12;
  const double u0 = std::acos(std::sqrt(std::clamp(P, 0.0, 1.0)));
  const double v0 = std::asin(std::sqrt(std::clamp(Q, 0.0, 1.0)));
  std::vector<Splitting> live, degenerate;
  for (double u : {u0, -u0}) {
    for (double v : {v0, kPi - v0}) {
      const double beta = 0.5 * (v - u);
      const double gamma = 0.5 * (u + v);
      if (beta < -slack || beta > kPi / 4.0 + slack || gamma < -slack || gamma > kPi / 2.0 + slack) {
        continue;
      }
      const Splitting s{std::clamp(std::cos(2.0 * std::clamp(beta, 0.0, kPi / 4.0)), 0.0, 1.0),
                        std::cos(std::clamp(gamma, 0.0, kPi / 2.0))};
      (s.epsilon <= slack ? degenerate : live).push_back(s);
    }
  }
  std::stable_sort(live.begin(), live.end(),
                   [](const Splitting& a, const Splitting& b) { return a.r_prime > b.r_prime; });
  live.insert(live.end(), degenerate.begin(), degenerate.end());
  return live;
}

}  // namespace

GtomConfig solve_gtom_params(const GtomTarget& target, bool allow_output_swap) {
  check_unit(target.p, "p");
  check_unit(target.q, "q");
  check_direction(target.theta, target.phi);

  const bool swap = target.p + target.q < 1.0;
  if (swap && !allow_output_swap) {
    throw Error(ErrorCode::kNoSolution,
                "p + q < 1 is not reachable with fixed output ports, residual " +
                    residual_text(1.0 - target.p - target.q));
  }
  const double P = swap ? 1.0 - target.p : target.p;
  const double Q = swap ? 1.0 - target.q : target.q;
  const std::vector<Splitting> cands = split_unswapped(P, Q);
  if (cands.empty()) throw Error(ErrorCode::kNoSolution, "no (eps, r') reproduces the requested p, q");

  // First candidate (largest r', eps > 0 preferred) that lands well inside
  // the tolerance; otherwise the best one. Near eps = 1 a candidate can be
  // exact on paper yet lose ~sqrt(DBL_EPSILON) in p through sqrt(1 - eps).
  std::optional<GtomConfig> best;
  double best_residual = std::numeric_limits<double>::infinity();
  for (const Splitting& s : cands) {
    GtomConfig cfg;
    try {
      cfg.sastom = solve_sastom_params({s.epsilon, target.theta, target.phi});
    } catch (const Error&) {
      continue;
    }
    cfg.r_prime = s.r_prime;
    cfg.swap_outputs = swap;
    const GtomResult res = build_gtom(cfg);
    const double residual = std::max(std::abs(res.p - target.p), std::abs(res.q - target.q));
    if (residual < best_residual) {
      best = cfg;
      best_residual = residual;
    }
    if (residual <= kRoundTripTol * 1e-2) return cfg;
  }
  if (!best || !(best_residual <= kRoundTripTol)) {
    throw Error(ErrorCode::kNoSolution, "GTOM solve missed the target, residual " + residual_text(best_residual));
  }
  return *best;
}

GtomConfig partial_collapse(double p, double theta, double phi) {
  check_unit(p, "p");
  check_direction(theta, phi);
  const double eps = std::sqrt(1.0 - p);
  GtomConfig cfg;
  cfg.sastom = solve_sastom_params({eps, theta, phi});
  cfg.r_prime = std::sqrt((1.0 - eps) / 2.0);
  return cfg;
}

namespace {

Complex2x2 pseudo_inverse(const Complex2x2& y, double tol) {
  const HermitianEigenSystem es = hermitian_eigensystem(gram(y));
  Complex2x2 out = Complex2x2::zero();
  for (int i = 0; i < 2; ++i) {
    const Ket yv = y * es.vectors[i];
    const double s = norm(yv);
    if (s <= tol) continue;
    out += Complex2x2::outer(es.vectors[i], yv) * (1.0 / (s * s));
  }
  return out;
}

}  // namespace

ChainConfig decompose_povm_to_chain(const std::vector<Complex2x2>& targets) {
  constexpr double tol = kRoundTripTol;
  if (targets.size() < 2) throw Error(ErrorCode::kInvalidConfig, "need at least two outcomes");
  Complex2x2 sum = Complex2x2::zero();
  for (const Complex2x2& k : targets) {
    if (!k.is_finite()) throw Error(ErrorCode::kNonFinite, "target has non-finite entries");
    sum += gram(k);
  }
  if (!(max_abs_diff(sum, Complex2x2::identity()) <= tol)) {
    throw Error(ErrorCode::kIncompleteSet, "targets are not complete");
  }

  ChainConfig cfg;
  Complex2x2 y = Complex2x2::identity();
  for (std::size_t l = 0; l + 1 < targets.size(); ++l) {
    const Complex2x2 e = gram(targets[l]);
    const Complex2x2 m1 = right_polar_decompose(targets[l] * pseudo_inverse(y, 1e-12)).positive_part;
    if (max_abs_diff(gram(m1 * y), e) > tol) {
      throw Error(ErrorCode::kSingularStage,
                  "outcome " + std::to_string(l) + " acts outside the image of the earlier stages");
    }
    Complex2x2 m2;
    try {
      m2 = psd_sqrt(Complex2x2::identity() - gram(m1), tol);
    } catch (const Error&) {
      throw Error(ErrorCode::kSingularStage, "stage " + std::to_string(l) + " is not contractive");
    }

    const HermitianEigenSystem es = hermitian_eigensystem(m1);
    const SphericalAngles dir = angles_of(bloch_of_state(es.vectors[0]));
    const double hi = std::max(0.0, es.values[0]);
    const double lo = std::max(0.0, es.values[1]);
    cfg.stages.push_back(solve_gtom_params({std::min(1.0, hi * hi), std::min(1.0, lo * lo), dir.theta, dir.phi}, true));
    y = m2 * y;
  }
  if (max_abs_diff(gram(y), gram(targets.back())) > tol) {
    throw Error(ErrorCode::kSingularStage, "last outcome does not match the remaining branch");
  }
  return cfg;
}

std::vector<Complex2x2> unbiased_four_outcome_targets(double x) {
  check_unit(x, "x");
  const double s2 = std::numbers::sqrt2;
  const double n[4][3] = {{0.0, 0.0, 1.0},
                          {2.0 * s2 / 3.0, 0.0, -1.0 / 3.0},
                          {-s2 / 3.0, std::sqrt(2.0 / 3.0), -1.0 / 3.0},
                          {-s2 / 3.0, -std::sqrt(2.0 / 3.0), -1.0 / 3.0}};
  std::vector<Complex2x2> out;
  for (const auto& v : n) {
    const Complex2x2 e = 0.25 * (Complex2x2::identity() +
                                 x * (v[0] * Complex2x2::pauli_x() + v[1] * Complex2x2::pauli_y() +
                                      v[2] * Complex2x2::pauli_z()));
    out.push_back(psd_sqrt(e));
  }
  return out;
}

}  // namespace povm
