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

#include "rank2/antilinear.hpp"

#include <algorithm>
#include <cmath>

namespace rank2 {

namespace {

bool is_symmetric(const ComplexMatrix& m) {
  const double tol = kTolHerm * std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (std::abs(m(i, j) - m(j, i)) > tol) return false;
  return true;
}

void require_dim(bool ok, const char* what) {
  if (!ok) throw Rank2Error(ErrorKind::kDimensionMismatch, what);
}

}  // namespace

AntilinearOp::AntilinearOp(ComplexMatrix m) : m_(std::move(m)) {
  require_dim(m_.is_square() && m_.rows() >= 1, "anti-linear operator needs a square matrix");
  hermitian_ = is_symmetric(m_);
}

AntilinearOp AntilinearOp::spin_flip() { return AntilinearOp(ComplexMatrix{{0.0, 1.0}, {-1.0, 0.0}}); }

AntilinearOp AntilinearOp::conjugation(std::size_t dim) {
  return AntilinearOp(ComplexMatrix::identity(dim));
}

CVector AntilinearOp::apply(std::span<const Complex> psi) const {
  require_dim(psi.size() == dim(), "anti-linear operator applied to a vector of wrong size");
  return m_ * std::span<const Complex>(rank2::conj(psi));
}

AntilinearOp adjoint(const AntilinearOp& t) { return AntilinearOp(t.matrix().transpose()); }

AntilinearOp hermitian_part(const AntilinearOp& t) {
  ComplexMatrix sym = t.matrix() + t.matrix().transpose();
  sym *= 0.5;
  return AntilinearOp(std::move(sym));
}

AntilinearOp compose(const ComplexMatrix& l, const AntilinearOp& t) {
  return AntilinearOp(l * t.matrix());
}

AntilinearOp compose(const AntilinearOp& t, const ComplexMatrix& l) {
  return AntilinearOp(t.matrix() * l.conj());
}

ComplexMatrix compose(const AntilinearOp& t1, const AntilinearOp& t2) {
  return t1.matrix() * t2.matrix().conj();
}

AntilinearOp sandwich_antilinear(const ComplexMatrix& a, const AntilinearOp& t,
                                 const ComplexMatrix& b) {
  require_dim(a.rows() == t.dim() && b.rows() == t.dim() && a.cols() == b.cols(),
              "sandwich shapes are incompatible");
  return AntilinearOp(a.adjoint() * t.matrix() * b.conj());
}

ComplexMatrix conj_sandwich(const AntilinearOp& t, const ComplexMatrix& x) {
  require_dim(x.rows() == t.dim() && x.cols() == t.dim(), "conj_sandwich dimension mismatch");
  return t.matrix() * x.conj() * t.matrix().conj();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

AntilinearOp kron(const AntilinearOp& a, const AntilinearOp& b) {
  return AntilinearOp(kron(a.matrix(), b.matrix()));
}

Takagi takagi(const ComplexMatrix& symmetric) {
  require_dim(symmetric.is_square(), "Takagi factorization needs a square matrix");
  if (!is_symmetric(symmetric))
    throw Rank2Error(ErrorKind::kNotHermitian, "Takagi factorization needs a symmetric matrix");
  const std::size_t n = symmetric.rows();
  require_dim(n <= 2 * kMaxDim, "Takagi factorization dimension too large");

  // M conj(u) = sigma u with u = x + i y is the real symmetric eigenproblem
  // [[Re M, Im M], [Im M, -Re M]] (x; y) = sigma (x; y). Its spectrum is
  // {+sigma_k} together with {-sigma_k}; the -sigma partner of u is i u.
  ComplexMatrix real_form(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = symmetric(i, j).real();
      const double im = symmetric(i, j).imag();
      real_form(i, j) = re;
      real_form(i, n + j) = im;
      real_form(n + i, j) = im;
      real_form(n + i, n + j) = -re;
    }
  }
  const EigenDecomposition ed = hermitian_eigen(real_form);
  const double zero_tol = 1e-12 * std::max(ed.values.front(), 1e-300);

  std::vector<CVector> basis;
  std::vector<double> sigma;
  auto try_add = [&](std::size_t k, double value) {
    CVector u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = Complex(ed.vectors(i, k).real(), ed.vectors(n + i, k).real());
    for (const auto& prev : basis) {
      const Complex overlap = inner(prev, u);
      for (std::size_t i = 0; i < n; ++i) u[i] -= overlap * prev[i];
    }
    const double len = norm(u);
    if (len < 0.5) return;
    for (auto& z : u) z /= len;
    basis.push_back(std::move(u));
    sigma.push_back(value);
  };
  for (std::size_t k = 0; k < 2 * n && basis.size() < n; ++k) {
    if (ed.values[k] > zero_tol) try_add(k, ed.values[k]);
  }
  for (std::size_t k = 0; k < 2 * n && basis.size() < n; ++k) {
    if (std::abs(ed.values[k]) <= zero_tol) try_add(k, 0.0);
  }
  for (std::size_t k = 0; k < n && basis.size() < n; ++k) {
    // Numerical safety net: complete with standard basis vectors.
    CVector e(n);
    e[k] = 1.0;
    for (const auto& prev : basis) {
      const Complex overlap = inner(prev, e);
      for (std::size_t i = 0; i < n; ++i) e[i] -= overlap * prev[i];
    }
    const double len = norm(e);
    if (len < 0.5) continue;
    for (auto& z : e) z /= len;
    basis.push_back(std::move(e));
    sigma.push_back(0.0);
  }

  Takagi out{ComplexMatrix(n, n), sigma};
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out.unitary(i, k) = basis[k][i];
  return out;
}

PolarConjugation polar_conjugation(const AntilinearOp& t) {
  if (!t.hermitian())
    throw Rank2Error(ErrorKind::kNotHermitian, "polar conjugation needs a Hermitian anti-linear operator");
  if (std::abs(t.matrix().determinant()) <= kTolDegenerate)
    throw Rank2Error(ErrorKind::kDegenerate, "polar conjugation of a singular operator is not unique");
  const Takagi tk = takagi(t.matrix());
  const ComplexMatrix& u = tk.unitary;
  ComplexMatrix d = ComplexMatrix::zeros(t.dim(), t.dim());
  for (std::size_t k = 0; k < t.dim(); ++k) d(k, k) = tk.singular_values[k];
  return {AntilinearOp(u * u.transpose()), u * d * u.adjoint()};
}

}  // namespace rank2
