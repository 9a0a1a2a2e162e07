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

#include "rank2/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace rank2 {

namespace {

void require(bool ok, ErrorKind kind, const char* what) {
  if (!ok) throw Rank2Error(kind, what);
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::kDimensionMismatch,
          "matrix shapes differ");
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorKind::kDimensionMismatch, "ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  ComplexMatrix m(v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conj() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  require(is_square(), ErrorKind::kDimensionMismatch, "trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Complex ComplexMatrix::determinant() const {
  require(is_square(), ErrorKind::kDimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 1) return data_[0];
  if (n == 2) return data_[0] * data_[3] - data_[1] * data_[2];
  ComplexMatrix lu = *this;
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(pivot, k))) pivot = i;
    if (lu(pivot, k) == 0.0) return 0.0;
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(pivot, j));
      det = -det;
    }
    det *= lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) / lu(k, k);
      for (std::size_t j = k; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }
  return det;
}

ComplexMatrix ComplexMatrix::inverse() const {
  require(is_square(), ErrorKind::kDimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = rows_;
  ComplexMatrix a = *this;
  ComplexMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(pivot, k))) pivot = i;
    require(std::abs(a(pivot, k)) > 0.0, ErrorKind::kDegenerate, "singular matrix");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(k, j), a(pivot, j));
      std::swap(inv(k, j), inv(pivot, j));
    }
    const Complex d = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = a(i, k);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

CVector ComplexMatrix::col(std::size_t c) const {
  CVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  require_same_shape(*this, other);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows(), ErrorKind::kDimensionMismatch, "matrix product shape mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  require(a.cols() == v.size(), ErrorKind::kDimensionMismatch, "matrix-vector shape mismatch");
  CVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] += a(i, k) * v[k];
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  require(a.size() == b.size(), ErrorKind::kDimensionMismatch, "inner product size mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

CVector conj(std::span<const Complex> v) {
  CVector out(v.begin(), v.end());
  for (auto& z : out) z = std::conj(z);
  return out;
}

CVector scaled(std::span<const Complex> v, Complex s) {
  CVector out(v.begin(), v.end());
  for (auto& z : out) z *= s;
  return out;
}

ComplexMatrix outer(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

HermitianOp::HermitianOp(const ComplexMatrix& m) : matrix_(m) {
  require(m.is_square() && m.rows() >= 1, ErrorKind::kDimensionMismatch,
          "Hermitian operator must be a non-empty square matrix");
  require(m.all_finite(), ErrorKind::kNotHermitian, "matrix has non-finite entries");
  const double tol = kTolHerm * std::max(1.0, m.max_abs());
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol)
        throw Rank2Error(ErrorKind::kNotHermitian,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) +
                             ") violates Hermitian symmetry");
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      matrix_(i, j) = avg;
      matrix_(j, i) = std::conj(avg);
    }
    matrix_(i, i) = matrix_(i, i).real();
  }
  eigenvalues_ = hermitian_eigen(matrix_).values;
}

bool HermitianOp::is_psd(double tol) const {
  const double scale = std::max(1.0, std::abs(eigenvalues_.front()));
  return eigenvalues_.back() >= -tol * scale;
}

namespace {

EigenDecomposition eigen_2x2(const ComplexMatrix& h) {
  const double a = h(0, 0).real();
  const double d = h(1, 1).real();
  const Complex b = h(0, 1);
  const double mean = 0.5 * (a + d);
  const double half_gap = std::hypot(0.5 * (a - d), std::abs(b));
  EigenDecomposition ed{{mean + half_gap, mean - half_gap}, ComplexMatrix(2, 2)};
  Complex v0, v1;
  if (std::abs(b) <= 1e-300) {
    if (a >= d) {
      v0 = 1.0;
      v1 = 0.0;
    } else {
      v0 = 0.0;
      v1 = 1.0;
    }
  } else {
    const double lam = ed.values[0];
    // Two equivalent null vectors of (H - lam); keep the better conditioned one.
    const Complex p0 = b, p1 = lam - a;
    const Complex q0 = lam - d, q1 = std::conj(b);
    const double np = std::norm(p0) + std::norm(p1);
    const double nq = std::norm(q0) + std::norm(q1);
    if (np >= nq) {
      v0 = p0 / std::sqrt(np);
      v1 = p1 / std::sqrt(np);
    } else {
      v0 = q0 / std::sqrt(nq);
      v1 = q1 / std::sqrt(nq);
    }
  }
  ed.vectors(0, 0) = v0;
  ed.vectors(1, 0) = v1;
  ed.vectors(0, 1) = -std::conj(v1);
  ed.vectors(1, 1) = std::conj(v0);
  return ed;
}

EigenDecomposition eigen_jacobi(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  ComplexMatrix a = h;
  ComplexMatrix v = ComplexMatrix::identity(n);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) total += std::norm(a(i, j));
  const double eps = 1e-30 * std::max(total, 1e-300);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (off <= eps) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double h_pq = std::abs(a(p, q));
        if (h_pq == 0.0) continue;
        const Complex phase = a(p, q) / h_pq;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * h_pq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) on (p, q) followed by the real rotation.
        const Complex j_pp = c, j_pq = s;
        const Complex j_qp = -s * std::conj(phase), j_qq = c * std::conj(phase);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * j_pp + akq * j_qp;
          a(k, q) = akp * j_pq + akq * j_qq;
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * j_pp + vkq * j_qp;
          v(k, q) = vkp * j_pq + vkq * j_qq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(j_pp) * apk + std::conj(j_qp) * aqk;
          a(q, k) = std::conj(j_pq) * apk + std::conj(j_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
  EigenDecomposition ed{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    ed.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) ed.vectors(i, k) = v(i, order[k]);
  }
  return ed;
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& h) {
  require(h.is_square() && h.rows() >= 1, ErrorKind::kDimensionMismatch,
          "eigendecomposition needs a non-empty square matrix");
  if (h.rows() == 1) return {{h(0, 0).real()}, ComplexMatrix::identity(1)};
  if (h.rows() == 2) return eigen_2x2(h);
  return eigen_jacobi(h);
}

std::vector<double> eig_psd(const HermitianOp& h) {
  std::vector<double> values = h.eigenvalues();
  const double scale = std::max(1.0, std::abs(values.front()));
  for (auto& v : values) {
    if (v < -kTolPsd * scale)
      throw Rank2Error(ErrorKind::kNotPsd, "eigenvalue " + std::to_string(v) + " is negative");
    if (v < 0.0) v = 0.0;
  }
  return values;
}

HermitianOp sqrt_psd(const HermitianOp& h) {
  const EigenDecomposition ed = hermitian_eigen(h.matrix());
  const double scale = std::max(1.0, std::abs(ed.values.front()));
  if (ed.values.back() < -kTolPsd * scale)
    throw Rank2Error(ErrorKind::kNotPsd, "square root of an operator that is not PSD");
  return HermitianOp(spectral_map(ed, [](double x) { return x > 0.0 ? std::sqrt(x) : 0.0; }));
}

double log_in_base(double y, EntropyBase base) {
  return base == EntropyBase::kBits ? std::log2(y) : std::log(y);
}

double eta(double y, EntropyBase base) {
  if (y < 0.0) throw Rank2Error(ErrorKind::kNegativeArgument, "eta of a negative number");
  if (y == 0.0) return 0.0;
  return -y * log_in_base(y, base);
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

double dot(const BlochVector& a, const BlochVector& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

BlochForm to_bloch(const ComplexMatrix& h) {
  require(h.rows() == 2 && h.cols() == 2, ErrorKind::kDimensionMismatch,
          "Bloch coordinates need a 2x2 matrix");
  const HermitianOp checked(h);
  const ComplexMatrix& m = checked.matrix();
  return {m(0, 0).real() + m(1, 1).real(),
          {2.0 * m(0, 1).real(), -2.0 * m(0, 1).imag(), m(0, 0).real() - m(1, 1).real()}};
}

ComplexMatrix from_bloch(const BlochForm& form) {
  const double t = form.trace;
  const BlochVector& r = form.r;
  return ComplexMatrix{{0.5 * (t + r.z), Complex(0.5 * r.x, -0.5 * r.y)},
                       {Complex(0.5 * r.x, 0.5 * r.y), 0.5 * (t - r.z)}};
}

const ComplexMatrix& pauli_x() {
  static const ComplexMatrix m{{0.0, 1.0}, {1.0, 0.0}};
  return m;
}

const ComplexMatrix& pauli_y() {
  static const ComplexMatrix m{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
  return m;
}

const ComplexMatrix& pauli_z() {
  static const ComplexMatrix m{{1.0, 0.0}, {0.0, -1.0}};
  return m;
}

}  // namespace rank2
