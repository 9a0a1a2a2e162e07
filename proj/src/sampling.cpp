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

#include "rank2/sampling.hpp"

#include <cmath>

namespace rank2 {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> g;
  const double re = g(rng);
  return {re, g(rng)};
}

}  // namespace

Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(splitmix(seed ^ splitmix(stream))); }

ComplexMatrix gaussian_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = gaussian(rng);
  return m;
}

CVector random_unit_vector(Rng& rng, std::size_t d) {
  CVector v(d);
  for (auto& z : v) z = gaussian(rng);
  const double n = norm(v);
  for (auto& z : v) z /= n;
  return v;
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix u = gaussian_matrix(rng, n, n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < k; ++l) {
      Complex ip = 0.0;
      for (std::size_t j = 0; j < n; ++j) ip += std::conj(u(j, l)) * u(j, k);
      for (std::size_t j = 0; j < n; ++j) u(j, k) -= ip * u(j, l);
    }
    double nrm = 0.0;
    for (std::size_t j = 0; j < n; ++j) nrm += std::norm(u(j, k));
    nrm = std::sqrt(nrm);
    for (std::size_t j = 0; j < n; ++j) u(j, k) /= nrm;
  }
  return u;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t d) {
  const ComplexMatrix g = gaussian_matrix(rng, d, d);
  return Complex(0.5) * (g + g.adjoint());
}

ComplexMatrix random_density(Rng& rng, std::size_t d, std::size_t rank) {
  const ComplexMatrix g = gaussian_matrix(rng, d, rank);
  const ComplexMatrix x = g * g.adjoint();
  return Complex(1.0 / x.trace().real()) * x;
}

RankTwoChannel random_channel(Rng& rng, std::size_t m, std::size_t d, bool trace_preserving) {
  if (trace_preserving && 2 * m < d)
    throw Rank2Error(ErrorKind::kDimensionMismatch, "a trace-preserving map needs 2m >= d");
  std::vector<ComplexMatrix> kraus;
  const double s = 1.0 / std::sqrt(static_cast<double>(m * d));
  for (std::size_t j = 0; j < m; ++j) kraus.push_back(Complex(s) * gaussian_matrix(rng, 2, d));
  if (trace_preserving) {
    ComplexMatrix sum = ComplexMatrix::zeros(d, d);
    for (const auto& k : kraus) sum += k.adjoint() * k;
    const ComplexMatrix inv_sqrt = sqrt_psd(HermitianOp(sum)).matrix().inverse();
    for (auto& k : kraus) k = k * inv_sqrt;
  }
  return RankTwoChannel(std::move(kraus), "random");
}

RankTwoChannel random_canonical(Rng& rng, bool trace_preserving) {
  auto draw = [&rng] {
    Complex z;
    do z = gaussian(rng);
    while (std::abs(z) < 0.1);
    return z;
  };
  Complex a00 = draw(), a11 = draw(), b01 = draw(), b10 = draw();
  if (trace_preserving) {
    const double c0 = std::sqrt(std::norm(a00) + std::norm(b10));
    const double c1 = std::sqrt(std::norm(a11) + std::norm(b01));
    a00 /= c0;
    b10 /= c0;
    a11 /= c1;
    b01 /= c1;
  }
  return RankTwoChannel::canonical_qubit(a00, a11, b01, b10);
}

}  // namespace rank2
