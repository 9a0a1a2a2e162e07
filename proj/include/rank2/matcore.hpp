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

// Small dense complex matrices (dimension at most kMaxDim, or 2 * kMaxDim for
// the real embedding used by the Takagi factorization), Hermitian
// eigendecomposition, PSD square roots and entropy helpers.

#ifndef RANK2_MATCORE_HPP
#define RANK2_MATCORE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rank2/errors.hpp"

namespace rank2 {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr std::size_t kMaxDim = 8;
inline constexpr double kTolHerm = 1e-12;
inline constexpr double kTolPsd = 1e-10;
inline constexpr double kTolDegenerate = 1e-12;

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Row-major nested initializer: {{a, b}, {c, d}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const Complex> entries);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;
  Complex trace() const;
  Complex determinant() const;
  ComplexMatrix inverse() const;
  CVector col(std::size_t c) const;

  double max_abs() const;
  bool all_finite() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);
CVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

/// Maximum entrywise absolute difference; shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// <a, b> = a^dagger b (conjugate-linear in the first slot).
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);
CVector conj(std::span<const Complex> v);
CVector scaled(std::span<const Complex> v, Complex s);
/// |a><b|
ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b);

/// A Hermitian matrix whose eigenvalues are computed once at construction.
class HermitianOp {
 public:
  /// Throws kNotHermitian when the input is not Hermitian within kTolHerm
  /// (relative to max(1, max |entry|)). The stored matrix is symmetrized.
  explicit HermitianOp(const ComplexMatrix& m);

  std::size_t dim() const noexcept { return matrix_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// Eigenvalues, descending.
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  double trace() const { return matrix_.trace().real(); }
  bool is_psd(double tol = kTolPsd) const;

 private:
  ComplexMatrix matrix_;
  std::vector<double> eigenvalues_;
};

struct EigenDecomposition {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column k belongs to values[k]
};

/// Eigendecomposition of a Hermitian matrix. Dimension 2 uses the closed form,
/// larger dimensions cyclic complex Jacobi rotations.
EigenDecomposition hermitian_eigen(const ComplexMatrix& h);

/// Eigenvalues of a PSD operator, descending, with values in [-kTolPsd, 0)
/// clamped to zero. Throws kNotPsd below that.
std::vector<double> eig_psd(const HermitianOp& h);

HermitianOp sqrt_psd(const HermitianOp& h);

/// Applies f to the spectrum of a Hermitian matrix.
template <typename F>
ComplexMatrix spectral_map(const EigenDecomposition& ed, F&& f) {
  const std::size_t n = ed.values.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(ed.values[k]);
    if (fk == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = ed.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(ed.vectors(j, k));
    }
  }
  return out;
}

enum class EntropyBase { kBits, kNats };

double log_in_base(double y, EntropyBase base);

/// -y log(y), zero at y = 0. Throws kNegativeArgument for y < 0.
double eta(double y, EntropyBase base = EntropyBase::kBits);

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
  friend BlochVector operator+(const BlochVector& a, const BlochVector& b) {
    return {a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend BlochVector operator-(const BlochVector& a, const BlochVector& b) {
    return {a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend BlochVector operator*(double s, const BlochVector& a) {
    return {s * a.x, s * a.y, s * a.z};
  }
};

double dot(const BlochVector& a, const BlochVector& b);

/// H = (t I + r . sigma) / 2 with t = tr H and r_i = tr(H sigma_i).
struct BlochForm {
  double trace = 0.0;
  BlochVector r;
};

BlochForm to_bloch(const ComplexMatrix& h);
ComplexMatrix from_bloch(const BlochForm& form);
inline ComplexMatrix from_bloch(double trace, const BlochVector& r) {
  return from_bloch(BlochForm{trace, r});
}

const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

}  // namespace rank2

#endif  // RANK2_MATCORE_HPP
