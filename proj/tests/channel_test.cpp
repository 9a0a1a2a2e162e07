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

#include <gtest/gtest.h>

#include <cmath>

#include "rank2/channel_io.hpp"
#include "rank2/concurrence.hpp"
#include "rank2/sampling.hpp"
#include "test_support.hpp"

namespace rank2 {
namespace {

using test::MatrixNear;
using test::ThrowsKind;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Vectorized symmetric matrices stacked as columns.
Eigen::MatrixXcd stack(const std::vector<DerivedKrausOp>& ops) {
  const std::size_t d = ops.front().vartheta.dim();
  Eigen::MatrixXcd out(d * d, ops.size());
  for (std::size_t c = 0; c < ops.size(); ++c)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) out(i * d + j, c) = ops[c].vartheta.matrix()(i, j);
  return out;
}

TEST(Channel, ConstructionErrors) {
  EXPECT_TRUE(ThrowsKind(ErrorKind::kBadSpec, [] { RankTwoChannel({}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDimensionMismatch, [] { RankTwoChannel({ComplexMatrix(3, 2)}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDimensionMismatch, [] { RankTwoChannel({ComplexMatrix(2, 9) + ComplexMatrix(2, 9)}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDimensionMismatch,
                         [] { RankTwoChannel({ComplexMatrix::identity(2), ComplexMatrix(2, 3)}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kLinearlyDependent,
                         [] { RankTwoChannel({ComplexMatrix::identity(2), Complex(0, 2) * ComplexMatrix::identity(2)}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kLinearlyDependent, [] { RankTwoChannel({ComplexMatrix(2, 2)}); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kOutOfRange, [] { RankTwoChannel::phase_damping(0.0); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kOutOfRange, [] { RankTwoChannel::phase_damping(1.0); }));
}

TEST(Channel, ApplyLengthOne) {
  const RankTwoChannel id({ComplexMatrix::identity(2)});
  const ComplexMatrix x{{0.3, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.7}};
  EXPECT_TRUE(MatrixNear(id.apply(x), x, 0.0));
  EXPECT_TRUE(id.derived_kraus().empty());
  EXPECT_TRUE(MatrixNear(id.derivative(x), ComplexMatrix(2, 2), 0.0));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDimensionMismatch, [&] { (void)id.apply(ComplexMatrix(3, 3)); }));
}

TEST(Channel, PhaseDampingAction) {
  Rng rng = make_rng(41, 0);
  for (double q : {0.1, 0.25, 0.5, 0.9}) {
    const RankTwoChannel ch = RankTwoChannel::phase_damping(q);
    EXPECT_EQ(ch.q(), q);
    const ComplexMatrix x = random_hermitian(rng, 4);
    ComplexMatrix expected(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        expected(i, j) = x(i, j) + x(i + 2, j + 2) + (1.0 - 2.0 * q) * (x(i, j + 2) + x(i + 2, j));
    EXPECT_TRUE(MatrixNear(ch.apply(x), expected, 1e-14)) << q;
    EXPECT_EQ(ch.predicates().trace_preserving, q == 0.5);
  }
}

TEST(Channel, PhaseDampingVarthetaIsScaledFlipPair) {
  const AntilinearOp ff = kron(AntilinearOp::spin_flip(), AntilinearOp::spin_flip());
  for (double q : {0.1, 0.3, 0.5, 0.8}) {
    const RankTwoChannel ch = RankTwoChannel::phase_damping(q);
    EXPECT_TRUE(MatrixNear(ch.vartheta().matrix(), -std::sqrt(q * (1.0 - q)) * ff.matrix(), 1e-15)) << q;
  }
}

TEST(Channel, CanonicalDetectionAndFrame) {
  const Complex a00(0.8, 0.1), a11(0.5, -0.2), b01(0.6, 0.2), b10(0.3, -0.4);
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(a00, a11, b01, b10);
  ASSERT_TRUE(ch.canonical().has_value());
  const auto& c = *ch.canonical();
  EXPECT_LT(std::abs(c.z0sq - std::conj(b10 * a00)), 1e-16);
  EXPECT_LT(std::abs(c.z1sq - std::conj(b01 * a11)), 1e-16);
  EXPECT_LT(std::abs(c.z0 - std::sqrt(c.z0sq)), 1e-16);
  EXPECT_GE(c.z0.real(), 0.0);
  EXPECT_FALSE(c.degenerate);
  EXPECT_TRUE(MatrixNear(ch.vartheta().matrix(), ComplexMatrix::diagonal(CVector{c.z0sq, -c.z1sq}), 1e-15));
  EXPECT_TRUE(MatrixNear(ch.frame().basis, ComplexMatrix::identity(2), 0.0));

  Rng rng = make_rng(42, 0);
  EXPECT_FALSE(random_channel(rng, 2, 2, false).canonical().has_value());
  EXPECT_FALSE(RankTwoChannel::phase_damping(0.5).is_qubit_length_two());
  EXPECT_TRUE(ThrowsKind(ErrorKind::kWrongLength, [] { (void)RankTwoChannel::phase_damping(0.5).frame(); }));
}

TEST(Channel, FrameDiagonalizesVartheta) {
  Rng rng = make_rng(43, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, rep % 2 == 0);
    const QubitFrame& f = ch.frame();
    EXPECT_TRUE(MatrixNear(f.basis.adjoint() * f.basis, ComplexMatrix::identity(2), 1e-13));
    const ComplexMatrix in_frame = f.basis.adjoint() * ch.vartheta().matrix() * f.basis.conj();
    EXPECT_TRUE(MatrixNear(in_frame, ComplexMatrix::diagonal(CVector{f.z0sq, -f.z1sq}), 1e-13));
    EXPECT_LT(std::abs(f.z0 * f.z0 - f.z0sq), 1e-14);
    EXPECT_LT(std::abs(f.z1 * f.z1 - f.z1sq), 1e-14);
  }
}

TEST(Channel, DegenerateDetection) {
  const double g = 0.5;
  const RankTwoChannel amp = RankTwoChannel::canonical_qubit(1.0, std::sqrt(1.0 - g), std::sqrt(g), 0.0);
  EXPECT_TRUE(amp.canonical()->degenerate);
  EXPECT_TRUE(amp.frame().degenerate);
  EXPECT_TRUE(amp.frame().z0_zero);
  EXPECT_FALSE(amp.frame().z1_zero);
  const RankTwoChannel zero = RankTwoChannel::canonical_qubit(0.6, 0.0, 0.8, 0.0);
  EXPECT_TRUE(zero.frame().z0_zero);
  EXPECT_TRUE(zero.frame().z1_zero);
}

TEST(Channel, Predicates) {
  const RankTwoChannel sym = RankTwoChannel::canonical_qubit(kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2);
  const ChannelPredicates p = sym.predicates();
  EXPECT_TRUE(p.trace_preserving);
  EXPECT_TRUE(p.unital);
  EXPECT_TRUE(p.doubly_stochastic);
  ASSERT_TRUE(p.equal_canonical_moduli.has_value());
  EXPECT_TRUE(*p.equal_canonical_moduli);

  const RankTwoChannel tp = RankTwoChannel::canonical_qubit(0.8, 0.6, Complex(0, 0.8), 0.6);
  EXPECT_TRUE(tp.predicates().trace_preserving);
  EXPECT_FALSE(*tp.predicates().equal_canonical_moduli);
  EXPECT_FALSE(RankTwoChannel::phase_damping(0.5).predicates().equal_canonical_moduli.has_value());
}

TEST(Channel, DetPureMatchesDirectEvaluation) {
  Rng rng = make_rng(44, 0);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t d = 2; d <= 5; ++d) {
      if (m > 2 * d) continue;
      const RankTwoChannel ch = random_channel(rng, m, d, false);
      for (int rep = 0; rep < 5; ++rep) {
        const CVector a = random_unit_vector(rng, d), b = random_unit_vector(rng, d);
        const Complex direct = ch.apply(outer(b, a)).determinant();
        EXPECT_LT(std::abs(ch.det_pure(a, b) - direct), 1e-13) << "m=" << m << " d=" << d;
        EXPECT_LT(std::abs(ch.det_pure(a, a) - ch.apply(outer(a, a)).determinant()), 1e-13);
      }
    }
  }
}

TEST(Channel, DerivativeGivesPureDeterminant) {
  Rng rng = make_rng(45, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 3, 3, false);
    const CVector psi = random_unit_vector(rng, 3);
    const ComplexMatrix pi = outer(psi, psi);
    const Complex lhs = inner(psi, ch.derivative(pi) * std::span<const Complex>(psi));
    EXPECT_LT(std::abs(lhs - ch.apply(pi).determinant()), 1e-13);
  }
}

TEST(Channel, CanonicalPureDeterminantFormula) {
  const Complex a00(0.8, 0.1), a11(0.5, -0.2), b01(0.6, 0.2), b10(0.3, -0.4);
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(a00, a11, b01, b10);
  const Complex z0 = ch.canonical()->z0, z1 = ch.canonical()->z1;
  Rng rng = make_rng(46, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const CVector a = random_unit_vector(rng, 2);
    const Complex u = z0 * std::conj(a[0]), v = z1 * std::conj(a[1]);
    const double expected = std::norm((u + v) * (u - v));
    EXPECT_NEAR(ch.det_pure(a, a).real(), expected, 1e-14);
  }
}

TEST(Channel, CopositiveAtQubitInputs) {
  Rng rng = make_rng(47, 0);
  for (int rep = 0; rep < 100; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2 + rep % 3, 2, false);
    const HermitianOp y(ch.derivative(random_density(rng, 2, 1 + rep % 2)));
    EXPECT_GE(y.eigenvalues().back(), -1e-14);
  }
}

TEST(Channel, KrausRemixingKeepsDerivedSpan) {
  Rng rng = make_rng(48, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t m = 3, d = 3;
    const RankTwoChannel ch = random_channel(rng, m, d, false);
    const ComplexMatrix u = random_unitary(rng, m);
    std::vector<ComplexMatrix> mixed;
    for (std::size_t j = 0; j < m; ++j) {
      ComplexMatrix k(2, d);
      for (std::size_t l = 0; l < m; ++l) k += u(j, l) * ch.kraus()[l];
      mixed.push_back(k);
    }
    const RankTwoChannel remixed(mixed);
    EXPECT_TRUE(MatrixNear(remixed.apply(ComplexMatrix::identity(d)), ch.apply(ComplexMatrix::identity(d)), 1e-13));
    const Eigen::MatrixXcd old_span = stack(ch.derived_kraus());
    const Eigen::MatrixXcd new_ops = stack(remixed.derived_kraus());
    const Eigen::MatrixXcd coeffs = old_span.colPivHouseholderQr().solve(new_ops);
    EXPECT_LT((old_span * coeffs - new_ops).norm(), 1e-12);
    EXPECT_TRUE(MatrixNear(remixed.derivative(ComplexMatrix::identity(d)), ch.derivative(ComplexMatrix::identity(d)),
                           1e-12));
  }
}

TEST(Channel, SubChannelAndDual) {
  Rng rng = make_rng(49, 0);
  const RankTwoChannel ch = random_channel(rng, 3, 2, true);
  const RankTwoChannel sub = ch.sub_channel(0, 2);
  EXPECT_EQ(sub.length(), 2u);
  EXPECT_TRUE(MatrixNear(sub.kraus()[1], ch.kraus()[2], 0.0));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kOutOfRange, [&] { (void)ch.sub_channel(1, 1); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kWrongLength, [&] { (void)ch.dual(); }));

  const RankTwoChannel pd = RankTwoChannel::phase_damping(0.5);
  const KrausMap dual = pd.dual();
  const ComplexMatrix x = random_density(rng, 4, 4), y = random_hermitian(rng, 2);
  EXPECT_LT(std::abs((y * pd.apply(x)).trace() - (dual.apply(y) * x).trace()), 1e-14);
  EXPECT_TRUE(dual.unital());
}

TEST(Channel, SignFlipsOfFrameParametersAreInvisible) {
  Rng rng = make_rng(50, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const RankTwoChannel ch = random_canonical(rng, false);
    const HermitianOp x(random_density(rng, 2, 2));
    QubitFrame flipped = ch.frame();
    flipped.z0 = -flipped.z0;
    const double base = closed_form_c2(ch.frame(), x.matrix());
    EXPECT_NEAR(closed_form_c2(flipped, x.matrix()), base, 1e-15);
    EXPECT_NEAR(std::abs(closed_form_c(flipped, x.matrix())), std::abs(closed_form_c(ch.frame(), x.matrix())), 1e-15);
    flipped.z1 = -flipped.z1;
    EXPECT_NEAR(closed_form_c2(flipped, x.matrix()), base, 1e-15);
  }
}

TEST(ChannelIo, RoundTrip) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(0.8, Complex(0.6, 0.2), 0.5, Complex(0.3, -0.4));
  const nlohmann::json j = channel_to_json(ch);
  ASSERT_TRUE(j.contains("canonical"));
  ASSERT_TRUE(j.contains("vartheta"));
  const RankTwoChannel back = channel_from_json(j);
  EXPECT_TRUE(MatrixNear(back.kraus()[0], ch.kraus()[0], 0.0));
  EXPECT_TRUE(MatrixNear(back.kraus()[1], ch.kraus()[1], 0.0));
  EXPECT_EQ(back.name(), "canonical");

  const RankTwoChannel pd = RankTwoChannel::phase_damping(0.3);
  const nlohmann::json jp = channel_to_json(pd);
  EXPECT_FALSE(jp.contains("canonical"));
  EXPECT_DOUBLE_EQ(jp["q"].get<double>(), 0.3);
  EXPECT_EQ(channel_from_json(jp).q(), 0.3);
}

TEST(ChannelIo, ParsesTextSpec) {
  const RankTwoChannel ch = parse_channel_spec(
      R"({"name": "amp", "kraus": [[[[1,0],[0,0]],[[0,0],[0.5,0]]], [[[0,0],[0.8,0]],[[0,0],[0,0]]]]})");
  EXPECT_EQ(ch.name(), "amp");
  EXPECT_EQ(ch.length(), 2u);
  EXPECT_EQ(ch.kraus()[1](0, 1), Complex(0.8, 0.0));
}

TEST(ChannelIo, RejectsMalformedSpecs) {
  const std::vector<std::string> bad = {
      "not json",
      "[1, 2]",
      R"({"kraus": []})",
      R"({"kraus": [[[[1,0],[0,0]]]], "extra": 1})",
      R"({"kraus": [[[[1,0]],[[0,0]],[[0,0]]]]})",
      R"({"kraus": [[[1,[0,0]],[[0,0],[1,0]]]]})",
      R"({"kraus": [[[[1,0],[0,0]],[[0,0]]]]})",
      R"({"kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]], "q": "half"})",
      R"({"kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]]], "name": 3})",
  };
  for (const auto& text : bad) EXPECT_TRUE(ThrowsKind(ErrorKind::kBadSpec, [&] { parse_channel_spec(text); })) << text;
  EXPECT_TRUE(ThrowsKind(ErrorKind::kBadSpec, [] { load_channel_spec("/nonexistent/channel.json"); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kLinearlyDependent, [] {
    parse_channel_spec(R"({"kraus": [[[[1,0],[0,0]],[[0,0],[1,0]]], [[[2,0],[0,0]],[[0,0],[2,0]]]]})");
  }));
}

}  // namespace
}  // namespace rank2
