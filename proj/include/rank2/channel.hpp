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

#ifndef RANK2_CHANNEL_HPP
#define RANK2_CHANNEL_HPP

#include <optional>
#include <string>
#include <vector>

#include "rank2/antilinear.hpp"
#include "rank2/matcore.hpp"

namespace rank2 {

inline constexpr double kTolPredicate = 1e-10;

/// A completely positive map X -> sum_j K_j X K_j^dagger with arbitrary Kraus
/// shapes. Used for duals, whose output is not two-dimensional.
class KrausMap {
 public:
  explicit KrausMap(std::vector<ComplexMatrix> kraus);

  std::size_t input_dim() const noexcept { return kraus_.front().cols(); }
  std::size_t output_dim() const noexcept { return kraus_.front().rows(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;
  bool trace_preserving(double tol = kTolPredicate) const;
  bool unital(double tol = kTolPredicate) const;

 private:
  std::vector<ComplexMatrix> kraus_;
};

/// Parameters of the canonical length-two qubit form
/// A = diag(a00, a11), B = antidiag(b01, b10).
struct QubitCanonicalParams {
  Complex a00, a11, b01, b10;
  Complex z0sq, z1sq;  // conj(b10 a00), conj(b01 a11)
  Complex z0, z1;      // principal square roots
  bool degenerate = false;
};

/// A basis of the input qubit in which the single derived operator of a
/// length-two qubit map reads diag(z0^2, -z1^2). For canonical channels the
/// basis is the reference basis and z0, z1 are the canonical parameters;
/// otherwise it comes from a Takagi factorization of the derived operator.
struct QubitFrame {
  ComplexMatrix basis;  // columns: frame vectors in reference coordinates
  Complex z0, z1;
  Complex z0sq, z1sq;
  bool degenerate = false;
  bool z0_zero = false;
  bool z1_zero = false;

  /// Coordinates of an operator in the frame: V^dagger X V.
  ComplexMatrix to_frame(const ComplexMatrix& x) const;
  ComplexMatrix from_frame(const ComplexMatrix& x) const;
  CVector vector_from_frame(std::span<const Complex> v) const;
};

struct DerivedKrausOp {
  std::size_t j = 0;
  std::size_t k = 0;
  AntilinearOp vartheta;
};

struct ChannelPredicates {
  bool trace_preserving = false;
  bool unital = false;
  bool doubly_stochastic = false;
  /// |a00| = |a11| = |b01| = |b10|, only for canonical channels.
  std::optional<bool> equal_canonical_moduli;
};

/// A completely positive map from H_d into H_2, given by linearly independent
/// Kraus operators of shape 2 x d. Derived data is computed at construction.
class RankTwoChannel {
 public:
  explicit RankTwoChannel(std::vector<ComplexMatrix> kraus, std::string name = {},
                          std::optional<double> q = std::nullopt);

  static RankTwoChannel canonical_qubit(Complex a00, Complex a11, Complex b01, Complex b10);
  /// tr_{2,q}: Kraus sqrt(1-q) (1 1) and sqrt(q) (1 -1), 0 < q < 1.
  static RankTwoChannel phase_damping(double q);

  std::size_t length() const noexcept { return kraus_.size(); }
  std::size_t input_dim() const noexcept { return kraus_.front().cols(); }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  const std::string& name() const noexcept { return name_; }
  std::optional<double> q() const noexcept { return q_; }
  /// (max |Kraus entry|)^2, the reference scale for degeneracy thresholds.
  double scale() const noexcept { return scale_; }

  ComplexMatrix apply(const ComplexMatrix& x) const;
  const std::vector<DerivedKrausOp>& derived_kraus() const noexcept { return derived_; }
  /// sum_{j<k} vartheta_jk o X o vartheta_jk.
  ComplexMatrix derivative(const ComplexMatrix& x) const;
  /// det Phi(|psi2><psi1|) through the derived operators.
  Complex det_pure(std::span<const Complex> psi1, std::span<const Complex> psi2) const;
  ChannelPredicates predicates(double tol = kTolPredicate) const;

  const std::optional<QubitCanonicalParams>& canonical() const noexcept { return canonical_; }
  bool is_qubit_length_two() const noexcept { return frame_.has_value(); }
  /// Throws kWrongLength unless d = 2 and m = 2.
  const QubitFrame& frame() const;
  /// The single derived operator of a length-two map; throws kWrongLength.
  const AntilinearOp& vartheta() const;

  RankTwoChannel sub_channel(std::size_t j, std::size_t k) const;
  /// X -> sum_j A_j^dagger X A_j; needs m = 2 and d in {2, 4}.
  KrausMap dual() const;
  KrausMap as_kraus_map() const { return KrausMap(kraus_); }

 private:
  std::vector<ComplexMatrix> kraus_;
  std::string name_;
  std::optional<double> q_;
  double scale_ = 0.0;
  std::vector<DerivedKrausOp> derived_;
  std::optional<QubitCanonicalParams> canonical_;
  std::optional<QubitFrame> frame_;
};

/// The derived operator (1/2)(A^* theta_f B - B^* theta_f A).
AntilinearOp derived_operator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace rank2

#endif  // RANK2_CHANNEL_HPP
