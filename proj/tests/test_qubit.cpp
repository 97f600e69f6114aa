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

#include "povm/error.hpp"
#include "povm/qubit.hpp"
#include "support/oracles.hpp"

using namespace povm;
using oracle::kPi;

TEST_CASE("Bloch vector of |H><H|") {
  const BlochVector b = bloch_of_projector(Complex2x2::diag(1.0, 0.0));
  CHECK(b.x == 0.0);
  CHECK(b.y == 0.0);
  CHECK(b.z == 1.0);
}

TEST_CASE("Bloch vector of (|H>+|V>)/sqrt2") {
  const double s = std::sqrt(0.5);
  const BlochVector b = bloch_of_projector(oracle::projector({s, s}));
  CHECK(std::abs(b.x - 1.0) < 1e-15);
  CHECK(std::abs(b.y) < 1e-15);
  CHECK(std::abs(b.z) < 1e-15);
}

TEST_CASE("Bloch vector at theta = pi/3, phi = pi/4 against Pauli traces") {
  const Complex2x2 p = oracle::projector(oracle::m_plus(kPi / 3, kPi / 4));
  const BlochVector b = bloch_of_projector(p);
  const auto tr = oracle::pauli_components(p);
  CHECK(std::abs(b.x - tr[0]) < 1e-14);
  CHECK(std::abs(b.y - tr[1]) < 1e-14);
  CHECK(std::abs(b.z - tr[2]) < 1e-14);
  CHECK(std::abs(b.x - std::sin(kPi / 3) * std::cos(kPi / 4)) < 1e-14);
  CHECK(std::abs(b.y - std::sin(kPi / 3) * std::sin(kPi / 4)) < 1e-14);
  CHECK(std::abs(b.z - std::cos(kPi / 3)) < 1e-14);
  CHECK(std::abs(b.norm() - 1.0) < 1e-10);
}

TEST_CASE("bloch_of_projector rejects non-projectors") {
  for (const Complex2x2& m : {Complex2x2::identity(), Complex2x2::diag(0.5, 0.5),
                              Complex2x2(0.5, 1.0, 0.0, 0.5)}) {
    try {
      bloch_of_projector(m);
      FAIL("expected NotProjector");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotProjector);
    }
  }
}

TEST_CASE("(theta, phi) round trip through the projector") {
  oracle::Random rng(21);
  for (int i = 0; i < 2000; ++i) {
    const double theta = rng.uniform(1e-6, kPi - 1e-6);
    const double phi = rng.uniform(-kPi + 1e-9, kPi);
    const SphericalAngles a = angles_of(bloch_of_projector(direction_projector(theta, phi)));
    CHECK(std::abs(a.theta - theta) <= 1e-9);
    CHECK(std::abs(fold_angle(a.phi - phi)) <= 1e-9);
    CHECK(max_abs_diff(direction_projector(theta, phi), oracle::projector(oracle::m_plus(theta, phi))) <= 1e-14);
  }
}

TEST_CASE("poles report phi = 0 and angle ranges hold") {
  CHECK(angles_of({0, 0, 1}).phi == 0.0);
  CHECK(angles_of({0, 0, -1}).phi == 0.0);
  CHECK(angles_of({0, 0, -1}).theta == doctest::Approx(kPi));
  CHECK(angles_of({-1, 0, 0}).phi == doctest::Approx(kPi));
  CHECK(fold_angle(-kPi) == doctest::Approx(kPi));
  CHECK(fold_angle(3 * kPi) == doctest::Approx(kPi));
  oracle::Random rng(22);
  for (int i = 0; i < 1000; ++i) {
    const SphericalAngles a = angles_of(bloch_of_state(rng.ket()));
    CHECK(a.theta >= 0.0);
    CHECK(a.theta <= kPi);
    CHECK(a.phi > -kPi);
    CHECK(a.phi <= kPi);
  }
}

TEST_CASE("direction and antipodal kets are orthonormal") {
  oracle::Random rng(23);
  for (int i = 0; i < 1000; ++i) {
    const double th = rng.uniform(0, kPi);
    const double ph = rng.uniform(-kPi, kPi);
    const Ket a = direction_ket(th, ph);
    const Ket b = antipodal_ket(th, ph);
    CHECK(std::abs(norm(a) - 1.0) < 1e-14);
    CHECK(std::abs(norm(b) - 1.0) < 1e-14);
    CHECK(std::abs(inner(a, b)) < 1e-14);
  }
}

TEST_CASE("polarization states: canonical phase, validation, presets") {
  const PolarizationState s = PolarizationState::from_amplitudes(Complex(0, 0.6), Complex(0, 0.8));
  CHECK(s.c_h() == Complex(0.6, 0.0));
  CHECK(std::abs(s.c_v() - 0.8) < 1e-15);
  const PolarizationState v = PolarizationState::from_amplitudes(0.0, Complex(0, -1));
  CHECK(v.c_v() == Complex(1.0, 0.0));
  CHECK_THROWS_AS(PolarizationState::from_amplitudes(1.0, 1.0), Error);

  const double s2 = std::sqrt(0.5);
  CHECK(std::abs(PolarizationState::preset("D").c_v() - s2) < 1e-15);
  CHECK(std::abs(PolarizationState::preset("A").c_v() + s2) < 1e-15);
  CHECK(std::abs(PolarizationState::preset("R").c_v() - Complex(0, s2)) < 1e-15);
  CHECK(std::abs(PolarizationState::preset("L").c_v() - Complex(0, -s2)) < 1e-15);
  CHECK(bloch_of_state(PolarizationState::preset("R").ket()).y == doctest::Approx(1.0));
  try {
    PolarizationState::preset("Q");
    FAIL("expected Parse");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
  }
}
