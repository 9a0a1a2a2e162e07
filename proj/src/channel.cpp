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

#include "rank2/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace rank2 {

namespace {

[[noreturn]] void fail(ErrorKind kind, const std::string& what) { throw Rank2Error(kind, what); }

bool close_to_identity(const ComplexMatrix& m, double tol) {
  return max_abs_diff(m, ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix sum_adjoint_products(const std::vector<ComplexMatrix>& kraus, bool left) {
  const std::size_t n = left ? kraus.front().cols() : kraus.front().rows();
  ComplexMatrix acc(n, n);
  for (const auto& k : kraus) acc += left ? k.adjoint() * k : k * k.adjoint();
  return acc;
}

std::optional<QubitCanonicalParams> detect_canonical(const std::vector<ComplexMatrix>& kraus,
                                                     double scale) {
  if (kraus.size() != 2 || kraus[0].cols() != 2) return std::nullopt;
  const ComplexMatrix& a = kraus[0];
  const ComplexMatrix& b = kraus[1];
  const double tol = 1e-14 * std::sqrt(scale);
  if (std::abs(a(0, 1)) > tol || std::abs(a(1, 0)) > tol) return std::nullopt;
  if (std::abs(b(0, 0)) > tol || std::abs(b(1, 1)) > tol) return std::nullopt;
  QubitCanonicalParams p;
  p.a00 = a(0, 0);
  p.a11 = a(1, 1);
  p.b01 = b(0, 1);
  p.b10 = b(1, 0);
  p.z0sq = std::conj(p.b10 * p.a00);
  p.z1sq = std::conj(p.b01 * p.a11);
  p.z0 = std::sqrt(p.z0sq);
  p.z1 = std::sqrt(p.z1sq);
  p.degenerate = std::abs(p.z0 * p.z1) <= kTolDegenerate * scale;
  return p;
}

QubitFrame make_frame(const std::optional<QubitCanonicalParams>& canonical, const AntilinearOp& vartheta,
                      double scale) {
  QubitFrame f;
  if (canonical) {
    f.basis = ComplexMatrix::identity(2);
    f.z0sq = canonical->z0sq;
    f.z1sq = canonical->z1sq;
    f.z0 = canonical->z0;
    f.z1 = canonical->z1;
  } else {
    const Takagi tk = takagi(vartheta.matrix());
    f.basis = tk.unitary;
    f.z0sq = tk.singular_values[0];
    f.z1sq = -tk.singular_values[1];
    f.z0 = std::sqrt(tk.singular_values[0]);
    f.z1 = Complex(0.0, std::sqrt(tk.singular_values[1]));
  }
  const double tol = kTolDegenerate * scale;
  f.degenerate = std::abs(f.z0 * f.z1) <= tol;
  if (f.degenerate) {
    const bool both = std::max(std::norm(f.z0), std::norm(f.z1)) <= tol;
    f.z0_zero = both || std::abs(f.z0) <= std::abs(f.z1);
    f.z1_zero = both || !f.z0_zero;
  }
  return f;
}

}  // namespace

KrausMap::KrausMap(std::vector<ComplexMatrix> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty()) fail(ErrorKind::kBadSpec, "a Kraus map needs at least one operator");
  for (const auto& k : kraus_)
    if (k.rows() != kraus_.front().rows() || k.cols() != kraus_.front().cols())
      fail(ErrorKind::kDimensionMismatch, "Kraus operators must share one shape");
}

ComplexMatrix KrausMap::apply(const ComplexMatrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim())
    fail(ErrorKind::kDimensionMismatch, "input operator has the wrong dimension");
  ComplexMatrix out(output_dim(), output_dim());
  for (const auto& k : kraus_) out += k * x * k.adjoint();
  return out;
}

bool KrausMap::trace_preserving(double tol) const {
  return close_to_identity(sum_adjoint_products(kraus_, true), tol);
}

bool KrausMap::unital(double tol) const {
  return close_to_identity(sum_adjoint_products(kraus_, false), tol);
}

ComplexMatrix QubitFrame::to_frame(const ComplexMatrix& x) const { return basis.adjoint() * x * basis; }

ComplexMatrix QubitFrame::from_frame(const ComplexMatrix& x) const { return basis * x * basis.adjoint(); }

CVector QubitFrame::vector_from_frame(std::span<const Complex> v) const { return basis * v; }

AntilinearOp derived_operator(const ComplexMatrix& a, const ComplexMatrix& b) {
  const AntilinearOp flip = AntilinearOp::spin_flip();
  ComplexMatrix m = sandwich_antilinear(a, flip, b).matrix();
#ifdef RANK2_MUTANT_VARTHETA
  // Deliberately wrong sign, used only by the mutation smoke test.
  m += sandwich_antilinear(b, flip, a).matrix();
#else
  m -= sandwich_antilinear(b, flip, a).matrix();
#endif
  m *= 0.5;
  return AntilinearOp(std::move(m));
}

RankTwoChannel::RankTwoChannel(std::vector<ComplexMatrix> kraus, std::string name,
                               std::optional<double> q)
    : kraus_(std::move(kraus)), name_(std::move(name)), q_(q) {
  if (kraus_.empty()) fail(ErrorKind::kBadSpec, "a channel needs at least one Kraus operator");
  const std::size_t d = kraus_.front().cols();
  if (d < 1 || d > kMaxDim) fail(ErrorKind::kDimensionMismatch, "input dimension must be in [1, 8]");
  for (const auto& k : kraus_) {
    if (k.rows() != 2 || k.cols() != d)
      fail(ErrorKind::kDimensionMismatch, "every Kraus operator must have shape 2 x d");
    if (!k.all_finite()) fail(ErrorKind::kBadSpec, "Kraus operator has non-finite entries");
    scale_ = std::max(scale_, k.max_abs() * k.max_abs());
  }
  if (scale_ == 0.0) fail(ErrorKind::kLinearlyDependent, "all Kraus operators vanish");

  const std::size_t m = kraus_.size();
  ComplexMatrix gram(m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) {
      Complex s = 0.0;
      for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < d; ++c) s += std::conj(kraus_[j](r, c)) * kraus_[k](r, c);
      gram(j, k) = s;
    }
  const std::vector<double> ev = HermitianOp(gram).eigenvalues();
  const auto rank = std::count_if(ev.begin(), ev.end(), [&](double v) { return v > 1e-10 * ev.front(); });
  if (static_cast<std::size_t>(rank) < m)
    fail(ErrorKind::kLinearlyDependent, "Kraus operators are linearly dependent (Gram rank " +
                                            std::to_string(rank) + " < " + std::to_string(m) + ")");

  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = j + 1; k < m; ++k) derived_.push_back({j, k, derived_operator(kraus_[j], kraus_[k])});
  canonical_ = detect_canonical(kraus_, scale_);
  if (d == 2 && m == 2) frame_ = make_frame(canonical_, derived_.front().vartheta, scale_);
}

RankTwoChannel RankTwoChannel::canonical_qubit(Complex a00, Complex a11, Complex b01, Complex b10) {
  return RankTwoChannel({ComplexMatrix{{a00, 0.0}, {0.0, a11}}, ComplexMatrix{{0.0, b01}, {b10, 0.0}}},
                        "canonical");
}

RankTwoChannel RankTwoChannel::phase_damping(double q) {
  if (!(q > 0.0 && q < 1.0)) fail(ErrorKind::kOutOfRange, "phase damping needs 0 < q < 1");
  const double sa = std::sqrt(1.0 - q);
  const double sb = std::sqrt(q);
  ComplexMatrix a{{sa, 0.0, sa, 0.0}, {0.0, sa, 0.0, sa}};
  ComplexMatrix b{{sb, 0.0, -sb, 0.0}, {0.0, sb, 0.0, -sb}};
  return RankTwoChannel({std::move(a), std::move(b)}, "phase_damping", q);
}

ComplexMatrix RankTwoChannel::apply(const ComplexMatrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim())
    fail(ErrorKind::kDimensionMismatch, "input operator has the wrong dimension");
  ComplexMatrix out(2, 2);
  for (const auto& k : kraus_) out += k * x * k.adjoint();
  return out;
}

ComplexMatrix RankTwoChannel::derivative(const ComplexMatrix& x) const {
  if (x.rows() != input_dim() || x.cols() != input_dim())
    fail(ErrorKind::kDimensionMismatch, "input operator has the wrong dimension");
  ComplexMatrix out(input_dim(), input_dim());
  for (const auto& op : derived_) out += conj_sandwich(op.vartheta, x);
  return out;
}

Complex RankTwoChannel::det_pure(std::span<const Complex> psi1, std::span<const Complex> psi2) const {
  if (psi1.size() != input_dim() || psi2.size() != input_dim())
    fail(ErrorKind::kDimensionMismatch, "input vector has the wrong dimension");
  Complex s = 0.0;
  for (const auto& op : derived_) {
    const Complex e1 = inner(psi1, op.vartheta.apply(psi1));
    const Complex e2 = inner(psi2, op.vartheta.apply(psi2));
    s += e1 * std::conj(e2);
  }
  return s;
}

ChannelPredicates RankTwoChannel::predicates(double tol) const {
  const KrausMap map(kraus_);
  ChannelPredicates p;
  p.trace_preserving = map.trace_preserving(tol);
  p.unital = map.unital(tol);
  p.doubly_stochastic = p.trace_preserving && p.unital;
  if (canonical_) {
    const double m0 = std::abs(canonical_->a00);
    const double rel = tol * std::max(1.0, m0);
    p.equal_canonical_moduli = std::abs(std::abs(canonical_->a11) - m0) <= rel &&
                               std::abs(std::abs(canonical_->b01) - m0) <= rel &&
                               std::abs(std::abs(canonical_->b10) - m0) <= rel;
  }
  return p;
}

const QubitFrame& RankTwoChannel::frame() const {
  if (!frame_) fail(ErrorKind::kWrongLength, "qubit frame needs a length-two map on one qubit");
  return *frame_;
}

const AntilinearOp& RankTwoChannel::vartheta() const {
  if (length() != 2) fail(ErrorKind::kWrongLength, "a single derived operator needs length two");
  return derived_.front().vartheta;
}

RankTwoChannel RankTwoChannel::sub_channel(std::size_t j, std::size_t k) const {
  if (j >= length() || k >= length() || j == k) fail(ErrorKind::kOutOfRange, "invalid Kraus pair");
  return RankTwoChannel({kraus_[j], kraus_[k]}, name_ + "[" + std::to_string(j) + "," + std::to_string(k) + "]");
}

KrausMap RankTwoChannel::dual() const {
  if (length() != 2) fail(ErrorKind::kWrongLength, "dual is provided for length-two maps");
  if (input_dim() != 2 && input_dim() != 4) fail(ErrorKind::kDimensionMismatch, "dual needs d = 2 or d = 4");
  return KrausMap({kraus_[0].adjoint(), kraus_[1].adjoint()});
}

}  // namespace rank2
