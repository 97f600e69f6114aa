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

#include "povm/qmat.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "povm/error.hpp"

namespace povm {

namespace {

// Relative size below which the second singular value is treated as zero.
constexpr double kRankTol = 8.0 * DBL_EPSILON;

}  // namespace

Complex2x2 Complex2x2::outer(const Ket& a, const Ket& b) {
  return {a[0] * std::conj(b[0]), a[0] * std::conj(b[1]),
          a[1] * std::conj(b[0]), a[1] * std::conj(b[1])};
}

Complex2x2 Complex2x2::adjoint() const {
  return {std::conj(e_[0]), std::conj(e_[2]), std::conj(e_[1]), std::conj(e_[3])};
}

bool Complex2x2::is_finite() const {
  return std::all_of(e_.begin(), e_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool Complex2x2::is_hermitian(double tol) const {
  return max_abs_diff(*this, adjoint()) <= tol;
}

bool Complex2x2::is_unitary(double tol) const {
  return max_abs_diff(adjoint() * *this, identity()) <= tol;
}

bool Complex2x2::is_psd(double tol) const {
  if (!is_finite() || !is_hermitian(tol)) return false;
  return hermitian_eigensystem(*this, tol).values[1] >= -tol;
}

Complex2x2& Complex2x2::operator+=(const Complex2x2& o) {
  for (int i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Complex2x2& Complex2x2::operator-=(const Complex2x2& o) {
  for (int i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Complex2x2& Complex2x2::operator*=(Complex s) {
  for (auto& z : e_) z *= s;
  return *this;
}

Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Ket operator*(const Complex2x2& a, const Ket& v) {
  return {a(0, 0) * v[0] + a(0, 1) * v[1], a(1, 0) * v[0] + a(1, 1) * v[1]};
}

double max_abs_diff(const Complex2x2& a, const Complex2x2& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double max_abs(const Complex2x2& a) { return max_abs_diff(a, Complex2x2::zero()); }

Complex2x2 commutator(const Complex2x2& a, const Complex2x2& b) { return a * b - b * a; }

Complex2x2 gram(const Complex2x2& a) {
  Complex2x2 g = a.adjoint() * a;
  g(0, 0) = g(0, 0).real();
  g(1, 1) = g(1, 1).real();
  g(1, 0) = std::conj(g(0, 1));
  return g;
}

Complex inner(const Ket& a, const Ket& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

double norm(const Ket& a) { return std::hypot(std::abs(a[0]), std::abs(a[1])); }

Ket scale(const Ket& a, Complex s) { return {a[0] * s, a[1] * s}; }

Ket orthogonal_complement(const Ket& a) { return {-std::conj(a[1]), std::conj(a[0])}; }

Ket fix_phase(const Ket& a) {
  const int lead = a[0] != 0.0 ? 0 : 1;
  if (a[lead] == 0.0) return a;
  Ket out = scale(a, std::conj(a[lead]) / std::abs(a[lead]));
  out[lead] = std::abs(a[lead]);
  return out;
}

Complex2x2 HermitianEigenSystem::reconstruct() const {
  return values[0] * Complex2x2::projector(vectors[0]) +
         values[1] * Complex2x2::projector(vectors[1]);
}

HermitianEigenSystem hermitian_eigensystem(const Complex2x2& a, double tol) {
  if (!a.is_finite()) throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");
  if (!a.is_hermitian(tol)) throw Error(ErrorCode::kNotHermitian, "matrix is not Hermitian");

  const double d0 = a(0, 0).real();
  const double d1 = a(1, 1).real();
  const Complex b = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
  const double half = 0.5 * (d0 - d1);
  const double mean = 0.5 * (d0 + d1);
  const double radius = std::hypot(half, std::abs(b));

  HermitianEigenSystem es;
  es.values = {mean + radius, mean - radius};

  if (b == 0.0 && half == 0.0) {
    es.vectors = {Ket{1.0, 0.0}, Ket{0.0, 1.0}};
    return es;
  }
  // Pick the eigenvector formula whose leading entry cannot cancel.
  Ket v = half >= 0.0 ? Ket{half + radius, std::conj(b)} : Ket{b, radius - half};
  v = fix_phase(scale(v, 1.0 / norm(v)));
  es.vectors = {v, fix_phase(orthogonal_complement(v))};
  return es;
}

Complex2x2 psd_sqrt(const Complex2x2& a, double tol) {
  const HermitianEigenSystem es = hermitian_eigensystem(a, tol);
  if (es.values[1] < -tol) {
    throw Error(ErrorCode::kNotPsd, "matrix has a negative eigenvalue");
  }
  const double s0 = std::sqrt(std::max(es.values[0], 0.0));
  const double s1 = std::sqrt(std::max(es.values[1], 0.0));
  return s0 * Complex2x2::projector(es.vectors[0]) + s1 * Complex2x2::projector(es.vectors[1]);
}

PolarDecomposition right_polar_decompose(const Complex2x2& x) {
  if (!x.is_finite()) throw Error(ErrorCode::kNonFinite, "matrix has non-finite entries");

  const HermitianEigenSystem es = hermitian_eigensystem(gram(x), 1.0);
  const Ket& v1 = es.vectors[0];
  const Ket& v2 = es.vectors[1];

  const Ket xv1 = x * v1;
  const double s1 = norm(xv1);
  if (s1 == 0.0) return {Complex2x2::identity(), Complex2x2::zero()};

  const Ket u1 = scale(xv1, 1.0 / s1);
  const Ket perp = orthogonal_complement(u1);
  const Complex along = inner(perp, x * v2);
  double s2 = std::abs(along);

  Ket u2;
  if (s2 > kRankTol * s1) {
    u2 = scale(perp, along / s2);
  } else {
    s2 = 0.0;
    const Complex overlap = inner(v2, perp);
    u2 = std::abs(overlap) > 1e-12 ? scale(perp, std::conj(overlap) / std::abs(overlap))
                                   : fix_phase(perp);
  }

  const Complex2x2 left = Complex2x2::outer(u1, v1) + Complex2x2::outer(u2, v2);
  const Complex2x2 positive =
      s1 * Complex2x2::projector(v1) + s2 * Complex2x2::projector(v2);
  return {left.adjoint(), positive};
}

Complex hs_inner(const Complex2x2& a, const Complex2x2& b) {
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += std::conj(a.entries()[i]) * b.entries()[i];
  return acc;
}

}  // namespace povm
