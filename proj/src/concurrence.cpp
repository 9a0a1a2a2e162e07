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

#include "rank2/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rank2 {

namespace {

// Spectral values below this fraction of the largest one are numerical zeros.
constexpr double kRankTol = 1e-14;

void require_psd(const HermitianOp& x) { (void)eig_psd(x); }

ComplexMatrix sqrt_with_rank_cut(const ComplexMatrix& h) {
  const EigenDecomposition ed = hermitian_eigen(h);
  const double cut = kRankTol * std::max(ed.values.front(), 0.0);
  return spectral_map(ed, [cut](double v) { return v > cut ? std::sqrt(v) : 0.0; });
}

// sqrt(det X) for a 2 x 2 PSD operator, with the same rank cut.
double sqrt_det_with_rank_cut(const HermitianOp& x) {
  const std::vector<double>& v = x.eigenvalues();
  const double lo = v[1] > kRankTol * std::max(v[0], 0.0) ? v[1] : 0.0;
  return std::sqrt(std::max(v[0], 0.0) * lo);
}

}  // namespace

std::string_view method_name(ConcurrenceMethod m) {
  switch (m) {
    case ConcurrenceMethod::kPairEigen: return "pair_eigen";
    case ConcurrenceMethod::kClosed2x2: return "closed_2x2";
    case ConcurrenceMethod::kDegenerateLinear: return "degenerate_linear";
    case ConcurrenceMethod::kPureDirect: return "pure_direct";
    case ConcurrenceMethod::kLowerBound: return "lower_bound";
  }
  return "unknown";
}

PairConcurrenceDetail pair_concurrence_detail(const HermitianOp& x1, const HermitianOp& x2) {
  if (x1.dim() != x2.dim()) throw Rank2Error(ErrorKind::kDimensionMismatch, "pair concurrence dimension mismatch");
  require_psd(x1);
  require_psd(x2);
  const ComplexMatrix s1 = sqrt_with_rank_cut(x1.matrix());
  const HermitianOp inner_op(s1 * x2.matrix() * s1);
  // Eigenvalues of (S1 X2 S1)^(1/2) are the square roots of those of S1 X2 S1.
  std::vector<double> mu = inner_op.eigenvalues();
  const double cut = kRankTol * std::max(mu.front(), 0.0);
  double lead = 0.0, rest = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double lam = mu[i] > cut ? std::sqrt(mu[i]) : 0.0;
    (i == 0 ? lead : rest) += lam;
  }
  PairConcurrenceDetail out;
  out.value = std::max(0.0, lead - rest);
  if (x1.dim() == 2) {
    const double td =
        (x1.matrix() * x2.matrix()).trace().real() - 2.0 * sqrt_det_with_rank_cut(x1) * sqrt_det_with_rank_cut(x2);
    out.trace_det = td;
    out.squared_discrepancy = std::abs(out.value * out.value - std::max(0.0, td));
    const double scale = std::max(1.0, x1.trace() * x2.trace());
    if (out.squared_discrepancy > 1e-9 * scale)
      throw std::logic_error("pair concurrence routes disagree beyond 1e-9");
  }
  return out;
}

double pair_concurrence(const HermitianOp& x1, const HermitianOp& x2) {
  return pair_concurrence_detail(x1, x2).value;
}

Complex closed_form_c(const QubitFrame& frame, const ComplexMatrix& x) {
  const ComplexMatrix xf = frame.to_frame(x);
  const double p = std::norm(frame.z0);
  const double q = std::norm(frame.z1);
  const Complex g = frame.z0 * std::conj(frame.z1);
  return 2.0 * (p * xf(0, 0) - q * xf(1, 1) + g * xf(1, 0) - std::conj(g) * xf(0, 1));
}

double closed_form_c2(const QubitFrame& frame, const ComplexMatrix& x) {
  const ComplexMatrix xf = frame.to_frame(x);
  const double p = std::norm(frame.z0);
  const double q = std::norm(frame.z1);
  const Complex g = frame.z0 * std::conj(frame.z1);
  const Complex diag = p * xf(0, 0) - q * xf(1, 1);
  const Complex off = g * xf(1, 0) - std::conj(g) * xf(0, 1);
  return (4.0 * diag * diag - 4.0 * off * off).real();
}

std::pair<double, double> linear_forms(const QubitFrame& frame, const ComplexMatrix& x) {
  const ComplexMatrix xf = frame.to_frame(x);
  const double p = std::norm(frame.z0);
  const double q = std::norm(frame.z1);
  const Complex g = frame.z0 * std::conj(frame.z1);
  const Complex l1 = 2.0 * (p * xf(0, 0) - q * xf(1, 1));
  const Complex l2 = Complex(0.0, 2.0) * (g * xf(1, 0) - std::conj(g) * xf(0, 1));
  return {l1.real(), l2.real()};
}

ConcurrenceReport concurrence(const RankTwoChannel& channel, const HermitianOp& x) {
  if (channel.length() != 2) throw Rank2Error(ErrorKind::kWrongLength, "concurrence needs a length-two map");
  if (x.dim() != channel.input_dim()) throw Rank2Error(ErrorKind::kDimensionMismatch, "state dimension mismatch");
  require_psd(x);
  const HermitianOp partner(conj_sandwich(channel.vartheta(), x.matrix()));
  const double eigen_route = 2.0 * pair_concurrence(x, partner);

  ConcurrenceReport report;
  report.C = eigen_route;
  report.method = ConcurrenceMethod::kPairEigen;
  if (!channel.is_qubit_length_two()) return report;

  const QubitFrame& frame = channel.frame();
  const Complex c = closed_form_c(frame, x.matrix());
  const auto [l1, l2] = linear_forms(frame, x.matrix());
  const double closed = std::sqrt(std::max(0.0, closed_form_c2(frame, x.matrix())));
  report.c_complex = c;
  report.l1 = l1;
  report.l2 = l2;
  report.degenerate = frame.degenerate;
  report.C = closed;
  report.method = ConcurrenceMethod::kClosed2x2;
  double disc = std::max(std::abs(closed - eigen_route), std::abs(std::abs(c) - closed));
  if (frame.degenerate) {
    const double lin = concurrence_degenerate(channel, x);
    disc = std::max(disc, std::abs(lin - closed));
    report.C = lin;
    report.method = ConcurrenceMethod::kDegenerateLinear;
  }
  report.route_discrepancy = disc;
  return report;
}

double concurrence_degenerate(const RankTwoChannel& channel, const HermitianOp& omega) {
  const QubitFrame& frame = channel.frame();
  if (!frame.degenerate) throw Rank2Error(ErrorKind::kNotDegenerate, "channel is not degenerate");
  require_psd(omega);
  if (frame.z0_zero && frame.z1_zero) return 0.0;
  const ComplexMatrix wf = frame.to_frame(omega.matrix());
  if (frame.z0_zero) return 2.0 * std::norm(frame.z1) * wf(1, 1).real();
  return 2.0 * std::norm(frame.z0) * wf(0, 0).real();
}

double pure_concurrence(const RankTwoChannel& channel, std::span<const Complex> psi) {
  const double det = channel.apply(outer(psi, psi)).determinant().real();
  return 2.0 * std::sqrt(std::max(0.0, det));
}

std::pair<CVector, CVector> separable_vectors(const RankTwoChannel& channel) {
  const QubitFrame& frame = channel.frame();
  if (frame.degenerate) throw Rank2Error(ErrorKind::kDegenerate, "degenerate channel has no separable pair");
  const double n = std::sqrt(std::norm(frame.z0) + std::norm(frame.z1));
  const CVector f1{std::conj(frame.z1) / n, std::conj(frame.z0) / n};
  const CVector f2{std::conj(frame.z1) / n, -std::conj(frame.z0) / n};
  return {frame.vector_from_frame(f1), frame.vector_from_frame(f2)};
}

std::pair<CVector, CVector> separable_roots(const AntilinearOp& vartheta) {
  if (vartheta.dim() != 2 || !vartheta.hermitian())
    throw Rank2Error(ErrorKind::kDimensionMismatch, "separable roots need a symmetric 2 x 2 operator");
  const ComplexMatrix& m = vartheta.matrix();
  const Complex m00 = m(0, 0), m01 = m(0, 1), m11 = m(1, 1);
  const double scale = std::max(m.max_abs(), 1e-300);
  const Complex disc = m01 * m01 - m00 * m11;
  if (std::abs(disc) <= kTolDegenerate * scale * scale)
    throw Rank2Error(ErrorKind::kDegenerate, "double root: the channel is degenerate");
  const Complex s = std::sqrt(disc);
  // q = -(m01 +- s) with the sign that avoids cancellation; the roots of
  // m00 t^2 + 2 m01 t + m11 are q / m00 and m11 / q.
  const Complex qa = -(m01 + s), qb = -(m01 - s);
  const Complex q = std::abs(qa) >= std::abs(qb) ? qa : qb;
  CVector u1{q, m00}, u2{m11, q};
  auto finish = [](CVector u) {
    const double n = norm(u);
    for (auto& z : u) z = std::conj(z) / n;
    return u;
  };
  return {finish(std::move(u1)), finish(std::move(u2))};
}

LowerBound lower_bound(const RankTwoChannel& channel, const HermitianOp& x) {
  if (x.dim() != channel.input_dim()) throw Rank2Error(ErrorKind::kDimensionMismatch, "state dimension mismatch");
  require_psd(x);
  LowerBound out;
  double sum_sq = 0.0;
  for (std::size_t j = 0; j < channel.length(); ++j)
    for (std::size_t k = j + 1; k < channel.length(); ++k) {
      const double c = concurrence(channel.sub_channel(j, k), x).C;
      sum_sq += c * c;
    }
  out.pairwise = std::sqrt(sum_sq);
  if (channel.input_dim() == 2) {
    double det_sum = 0.0;
    for (const auto& op : channel.derived_kraus()) det_sum += std::abs(op.vartheta.matrix().determinant());
    const double trace_term = (x.matrix() * channel.derivative(x.matrix())).trace().real();
    const double det_x = x.matrix().determinant().real();
    out.qubit_estimate = std::sqrt(std::max(0.0, 4.0 * trace_term - 8.0 * det_x * det_sum));
  }
  return out;
}

}  // namespace rank2
