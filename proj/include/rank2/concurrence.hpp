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

#ifndef RANK2_CONCURRENCE_HPP
#define RANK2_CONCURRENCE_HPP

#include <optional>
#include <string_view>
#include <utility>

#include "rank2/channel.hpp"

namespace rank2 {

enum class ConcurrenceMethod { kPairEigen, kClosed2x2, kDegenerateLinear, kPureDirect, kLowerBound };

std::string_view method_name(ConcurrenceMethod m);

struct ConcurrenceReport {
  double C = 0.0;
  std::optional<Complex> c_complex;
  std::optional<double> l1;
  std::optional<double> l2;
  ConcurrenceMethod method = ConcurrenceMethod::kPairEigen;
  bool degenerate = false;
  /// Largest disagreement between the routes that were evaluated.
  double route_discrepancy = 0.0;
};

/// max{0, lambda_1 - sum_{j>1} lambda_j}, lambda the spectrum of
/// (X1^(1/2) X2 X1^(1/2))^(1/2).
double pair_concurrence(const HermitianOp& x1, const HermitianOp& x2);

struct PairConcurrenceDetail {
  double value = 0.0;                  // eigenvalue route
  std::optional<double> trace_det;     // tr(X1 X2) - 2 sqrt(det(X1 X2)), dim 2 only
  double squared_discrepancy = 0.0;    // |value^2 - trace_det|
};

PairConcurrenceDetail pair_concurrence_detail(const HermitianOp& x1, const HermitianOp& x2);

/// c(X) in the frame of a length-two qubit map; X need not be Hermitian.
Complex closed_form_c(const QubitFrame& frame, const ComplexMatrix& x);
/// The squared concurrence as the quadratic form
/// 4 (|z0|^2 x00 - |z1|^2 x11)^2 - 4 (z0 z1* x10 - z1 z0* x01)^2 for
/// Hermitian X (frame coordinates taken internally).
double closed_form_c2(const QubitFrame& frame, const ComplexMatrix& x);
/// The real linear forms (l1, l2) with C^2 = l1^2 + l2^2.
std::pair<double, double> linear_forms(const QubitFrame& frame, const ComplexMatrix& x);

/// C(Phi; X) = 2 C(X, vartheta X vartheta) for a length-two map. For d = 2
/// the closed form is reported and the eigenvalue route is kept as a check.
ConcurrenceReport concurrence(const RankTwoChannel& channel, const HermitianOp& x);

/// Linear concurrence of a degenerate length-two qubit map.
double concurrence_degenerate(const RankTwoChannel& channel, const HermitianOp& omega);

/// 2 sqrt(det Phi(|psi><psi|)) for any length.
double pure_concurrence(const RankTwoChannel& channel, std::span<const Complex> psi);

/// The two normalized input vectors with <psi, vartheta psi> = 0, from the
/// frame parameters: psi_{1,2} = z1*|0> +- z0*|1>.
std::pair<CVector, CVector> separable_vectors(const RankTwoChannel& channel);

/// Independent route: the two roots of u^T M u = 0 for a symmetric 2 x 2
/// matrix M (psi = conj u), normalized. Throws kDegenerate for a double root.
std::pair<CVector, CVector> separable_roots(const AntilinearOp& vartheta);

struct LowerBound {
  double pairwise = 0.0;                // sqrt(sum_{j<k} C(Phi_jk; X)^2)
  std::optional<double> qubit_estimate; // d = 2 trace/determinant form
};

LowerBound lower_bound(const RankTwoChannel& channel, const HermitianOp& x);

}  // namespace rank2

#endif  // RANK2_CONCURRENCE_HPP
