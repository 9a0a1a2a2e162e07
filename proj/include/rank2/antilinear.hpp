// Copyright 2026 The rank2 Authors
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

// Anti-linear operators.
//
// An anti-linear operator T is stored as the matrix M of its action
//
//     T psi = M conj(psi).
//
// All composition rules follow from that single convention:
//
//     L o T       -> anti-linear, matrix L M
//     T o L       -> anti-linear, matrix M conj(L)
//     T1 o T2     -> linear,      matrix M1 conj(M2)
//     T2 o L o T1 -> linear,      matrix M2 conj(L) conj(M1)
//
// The adjoint, defined by <phi, T* psi> = <psi, T phi>, has matrix M^T, so T
// is Hermitian exactly when M is symmetric.

#ifndef RANK2_ANTILINEAR_HPP
#define RANK2_ANTILINEAR_HPP

#include <vector>

#include "rank2/matcore.hpp"

namespace rank2 {

class AntilinearOp {
 public:
  AntilinearOp() = default;
  explicit AntilinearOp(ComplexMatrix m);

  /// The spin-flip on a two-dimensional space, psi -> (conj c1, -conj c0).
  static AntilinearOp spin_flip();
  /// Plain complex conjugation in the reference basis.
  static AntilinearOp conjugation(std::size_t dim);

  std::size_t dim() const noexcept { return m_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }
  /// True iff M = M^T within kTolHerm.
  bool hermitian() const noexcept { return hermitian_; }

  CVector apply(std::span<const Complex> psi) const;

 private:
  ComplexMatrix m_;
  bool hermitian_ = false;
};

AntilinearOp adjoint(const AntilinearOp& t);
AntilinearOp hermitian_part(const AntilinearOp& t);

AntilinearOp compose(const ComplexMatrix& l, const AntilinearOp& t);
AntilinearOp compose(const AntilinearOp& t, const ComplexMatrix& l);
ComplexMatrix compose(const AntilinearOp& t1, const AntilinearOp& t2);

/// The anti-linear operator A* o T o B for linear A, B of shape 2 x d and T
/// acting on the two-dimensional space. Its matrix is A^dagger M conj(B).
AntilinearOp sandwich_antilinear(const ComplexMatrix& a, const AntilinearOp& t,
                                 const ComplexMatrix& b);

/// The linear operator T o X o T, matrix M conj(X) conj(M).
ComplexMatrix conj_sandwich(const AntilinearOp& t, const ComplexMatrix& x);

/// Extends the linear-conjugation convention to the tensor product of two
/// two-dimensional spaces: (T1 (x) T2) has matrix M1 (x) M2.
AntilinearOp kron(const AntilinearOp& a, const AntilinearOp& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Takagi factorization M = U diag(sigma) U^T of a complex symmetric matrix,
/// U unitary, sigma >= 0 descending.
struct Takagi {
  ComplexMatrix unitary;
  std::vector<double> singular_values;
};

Takagi takagi(const ComplexMatrix& symmetric);

/// T = theta |T| = |T| theta for a Hermitian, invertible anti-linear T, where
/// |T| = (T^2)^(1/2) and theta is a conjugation.
struct PolarConjugation {
  AntilinearOp theta;
  ComplexMatrix abs;
};

PolarConjugation polar_conjugation(const AntilinearOp& t);

}  // namespace rank2

#endif  // RANK2_ANTILINEAR_HPP
