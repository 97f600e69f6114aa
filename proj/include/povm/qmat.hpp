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

// Exact-contract 2x2 complex linear algebra. Everything in the library is
// expressed through Complex2x2: states' operators, unitaries, Kraus operators.

#include <array>
#include <complex>

namespace povm {

using Complex = std::complex<double>;
using Ket = std::array<Complex, 2>;

inline constexpr double kDefaultTol = 1e-10;

class Complex2x2 {
 public:
  constexpr Complex2x2() = default;
  constexpr Complex2x2(Complex a00, Complex a01, Complex a10, Complex a11)
      : e_{a00, a01, a10, a11} {}

  static constexpr Complex2x2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static constexpr Complex2x2 zero() { return {}; }
  static constexpr Complex2x2 diag(Complex d0, Complex d1) {
    return {d0, 0.0, 0.0, d1};
  }
  static constexpr Complex2x2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
  static constexpr Complex2x2 pauli_y() {
    return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0};
  }
  static constexpr Complex2x2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

  /// |a><b|
  static Complex2x2 outer(const Ket& a, const Ket& b);
  /// |a><a|
  static Complex2x2 projector(const Ket& a) { return outer(a, a); }

  constexpr Complex operator()(int row, int col) const { return e_[2 * row + col]; }
  constexpr Complex& operator()(int row, int col) { return e_[2 * row + col]; }
  constexpr const std::array<Complex, 4>& entries() const { return e_; }

  Complex2x2 adjoint() const;
  Complex trace() const { return e_[0] + e_[3]; }
  Complex det() const { return e_[0] * e_[3] - e_[1] * e_[2]; }

  bool is_finite() const;
  bool is_hermitian(double tol = kDefaultTol) const;
  bool is_unitary(double tol = kDefaultTol) const;
  bool is_psd(double tol = kDefaultTol) const;

  Complex2x2& operator+=(const Complex2x2& o);
  Complex2x2& operator-=(const Complex2x2& o);
  Complex2x2& operator*=(Complex s);

  friend Complex2x2 operator+(Complex2x2 a, const Complex2x2& b) { return a += b; }
  friend Complex2x2 operator-(Complex2x2 a, const Complex2x2& b) { return a -= b; }
  friend Complex2x2 operator-(Complex2x2 a) { return a *= -1.0; }
  friend Complex2x2 operator*(Complex2x2 a, Complex s) { return a *= s; }
  friend Complex2x2 operator*(Complex s, Complex2x2 a) { return a *= s; }
  friend Complex2x2 operator*(const Complex2x2& a, const Complex2x2& b);
  friend Ket operator*(const Complex2x2& a, const Ket& v);
  friend bool operator==(const Complex2x2&, const Complex2x2&) = default;

 private:
  std::array<Complex, 4> e_{};
};

/// Largest absolute entry of a - b.
double max_abs_diff(const Complex2x2& a, const Complex2x2& b);
double max_abs(const Complex2x2& a);
Complex2x2 commutator(const Complex2x2& a, const Complex2x2& b);
/// A†A, symmetrised so the result is exactly Hermitian.
Complex2x2 gram(const Complex2x2& a);

Complex inner(const Ket& a, const Ket& b);  // <a|b>
double norm(const Ket& a);
Ket scale(const Ket& a, Complex s);
/// Unit vector orthogonal to a (a must be normalised): (-conj a1, conj a0).
Ket orthogonal_complement(const Ket& a);
/// Multiplies by a phase so the first nonzero component is real-positive.
Ket fix_phase(const Ket& a);

struct HermitianEigenSystem {
  std::array<double, 2> values;  // descending
  std::array<Ket, 2> vectors;    // orthonormal, phase-fixed

  Complex2x2 reconstruct() const;
};

/// Closed-form eigensolve. Throws Error(kNotHermitian) when A is not
/// Hermitian within tol.
HermitianEigenSystem hermitian_eigensystem(const Complex2x2& a, double tol = kDefaultTol);

/// Principal square root of a PSD matrix. Eigenvalues in [-tol, 0] are
/// clamped to zero; anything more negative throws Error(kNotPsd).
Complex2x2 psd_sqrt(const Complex2x2& a, double tol = kDefaultTol);

struct PolarDecomposition {
  Complex2x2 unitary_part;   // V
  Complex2x2 positive_part;  // M = (X†X)^{1/2}
};

/// X = V† M with V unitary and M positive. When X has a zero singular value
/// the kernel direction v2 is mapped onto the unit vector orthogonal to the
/// image, with the phase chosen so that <v2|V†|v2> is real-positive.
PolarDecomposition right_polar_decompose(const Complex2x2& x);

/// Hilbert-Schmidt inner product Tr(A†B).
Complex hs_inner(const Complex2x2& a, const Complex2x2& b);

}  // namespace povm
