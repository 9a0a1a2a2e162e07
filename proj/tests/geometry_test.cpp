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

#include "rank2/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "rank2/sampling.hpp"
#include "test_support.hpp"

namespace rank2 {
namespace {

using test::bloch_state;
using test::MatrixNear;
using test::ThrowsKind;
using test::VectorNear;

constexpr double kInvSqrt2 = 0.70710678118654752440;

Complex unit_phase(Complex z) { return z / std::abs(z); }

TEST(ThetaIn, IsPolarConjugationOfVartheta) {
  Rng rng = make_rng(81, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const RankTwoChannel ch = rep % 2 ? random_canonical(rng, false) : random_channel(rng, 2, 2, rep % 4 == 0);
    const AntilinearOp th = theta_in(ch);
    EXPECT_TRUE(th.hermitian());
    EXPECT_TRUE(MatrixNear(compose(th, th), ComplexMatrix::identity(2), 1e-12));
    EXPECT_TRUE(MatrixNear(th.matrix(), polar_conjugation(ch.vartheta()).theta.matrix(), 1e-10));
  }
}

TEST(ThetaIn, ReflectionPreservesConcurrence) {
  Rng rng = make_rng(82, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, false);
    const AntilinearOp th = theta_in(ch);
    const ComplexMatrix x = random_density(rng, 2, 1 + rep % 2);
    const ComplexMatrix rx = reflect(th, x);
    EXPECT_TRUE(MatrixNear(rx, conj_sandwich(th, x), 1e-13));
    EXPECT_NEAR(rx.trace().real(), 1.0, 1e-13);
    EXPECT_NEAR(concurrence(ch, HermitianOp(rx)).C, concurrence(ch, HermitianOp(x)).C, 1e-12);
  }
}

TEST(ThetaOut, ConjugatesKrausOperatorsToMultiples) {
  Rng rng = make_rng(83, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const RankTwoChannel ch = random_canonical(rng, rep % 2 == 0);
    const auto& c = *ch.canonical();
    const AntilinearOp ti = theta_in(ch), to = theta_out(ch);
    const ComplexMatrix& a = ch.kraus()[0];
    const ComplexMatrix& b = ch.kraus()[1];
    EXPECT_TRUE(MatrixNear(compose(compose(to, a), ti), unit_phase(c.b01 * c.b10) * a, 1e-12));
    EXPECT_TRUE(MatrixNear(compose(compose(to, b), ti), -unit_phase(c.a00 * c.a11) * b, 1e-12));
    // Hence the channel intertwines the two reflections.
    const ComplexMatrix x = random_density(rng, 2, 2);
    EXPECT_TRUE(MatrixNear(ch.apply(reflect(ti, x)), reflect(to, ch.apply(x)), 1e-12));
  }
}

TEST(Geometry, ErrorsForUnsupportedChannels) {
  Rng rng = make_rng(84, 0);
  const RankTwoChannel generic = random_channel(rng, 2, 2, false);
  EXPECT_TRUE(ThrowsKind(ErrorKind::kNotCanonical, [&] { theta_out(generic); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kNotCanonical, [&] { psi_primed(generic); }));
  const RankTwoChannel amp = RankTwoChannel::canonical_qubit(1.0, std::sqrt(0.7), std::sqrt(0.3), 0.0);
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDegenerate, [&] { theta_in(amp); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDegenerate, [&] { theta_out(amp); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kDegenerate, [&] { constant_line(amp, HermitianOp(ComplexMatrix::identity(2))); }));
}

TEST(ConstantLine, SymmetricChannelRunsAlongX) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2);
  const ConstantConcurrenceLine line = constant_line(ch, HermitianOp(bloch_state(0.0, 0.6, 0.0)));
  const BlochVector d = line.direction_bloch;
  EXPECT_NEAR(std::abs(d.x), d.norm(), 1e-15);
  EXPECT_NEAR(line.concurrence, 0.6, 1e-15);
  ASSERT_TRUE(line.endpoints.has_value());
  EXPECT_NEAR(std::abs(line.endpoints->first.x), 0.8, 1e-14);
  EXPECT_NEAR(line.endpoints->first.y, 0.6, 1e-14);
}

TEST(ConstantLine, ConcurrenceIsConstantAndEndpointsArePure) {
  Rng rng = make_rng(85, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 50; ++rep) {
    const RankTwoChannel ch = rep % 2 ? random_canonical(rng, false) : random_channel(rng, 2, 2, false);
    const HermitianOp x(random_density(rng, 2, 2));
    const ConstantConcurrenceLine line = constant_line(ch, x);
    EXPECT_NEAR(line.direction.trace().real(), 0.0, 1e-15);
    ASSERT_TRUE(line.endpoint_params.has_value());
    const auto [t1, t2] = *line.endpoint_params;
    EXPECT_LE(t1, 0.0);
    EXPECT_GE(t2, 0.0);
    for (int k = 0; k <= 8; ++k) {
      const double t = t1 + (t2 - t1) * k / 8.0;
      EXPECT_NEAR(concurrence(ch, HermitianOp(line.point(t))).C, line.concurrence, 1e-10);
    }
    EXPECT_NEAR(line.endpoints->first.norm(), 1.0, 1e-10);
    EXPECT_NEAR(line.endpoints->second.norm(), 1.0, 1e-10);
    const double det1 = ch.apply(line.point(t1)).determinant().real();
    const double det2 = ch.apply(line.point(t2)).determinant().real();
    EXPECT_NEAR(det1, det2, 1e-10);
    // The complex form is unchanged along the line, not only its modulus.
    EXPECT_LT(std::abs(closed_form_c(ch.frame(), line.direction)), 1e-14);
  }
}

TEST(ConstantLine, NonStateBaseHasNoEndpoints) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(0.8, 0.6, 0.5, 0.4);
  const ConstantConcurrenceLine line = constant_line(ch, HermitianOp(ComplexMatrix::identity(2)));
  EXPECT_FALSE(line.endpoints.has_value());
}

TEST(PlanePoint, AddingSeparableProjectorsKeepsComplexForm) {
  Rng rng = make_rng(86, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, false);
    const ComplexMatrix x = random_density(rng, 2, 2);
    const ComplexMatrix y = plane_point(ch, x, 0.3, 0.7);
    EXPECT_LT(std::abs(closed_form_c(ch.frame(), y) - closed_form_c(ch.frame(), x)), 1e-13);
    EXPECT_NEAR(concurrence(ch, HermitianOp(y)).C, concurrence(ch, HermitianOp(x)).C, 1e-12);
  }
}

TEST(MaxConcurrence, BoundsAllStatesAndIsAttained) {
  Rng rng = make_rng(87, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, false);
    const double cmax = max_state_concurrence(ch);
    for (int k = 0; k < 50; ++k)
      EXPECT_LE(concurrence(ch, HermitianOp(random_density(rng, 2, 1))).C, cmax + 1e-12);
    const QubitFrame& f = ch.frame();
    const CVector e = f.vector_from_frame(std::norm(f.z0) >= std::norm(f.z1) ? CVector{1.0, 0.0} : CVector{0.0, 1.0});
    EXPECT_NEAR(concurrence(ch, HermitianOp(outer(e, e))).C, cmax, 1e-12);
  }
}

TEST(CylinderSamples, PointsLieOnTheLevelSet) {
  Rng rng = make_rng(88, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const RankTwoChannel ch = random_canonical(rng, true);
    const double level = max_state_concurrence(ch) * (0.1 + 0.08 * rep);
    const CylinderSamples s = cylinder_samples(ch, level, {32, 8});
    EXPECT_FALSE(s.degenerate);
    EXPECT_FALSE(s.points.empty());
    for (const SamplePoint& p : s.points) {
      EXPECT_NEAR(p.C, level, 1e-8);
      EXPECT_LE(p.r.norm(), 1.0 + 1e-12);
      EXPECT_NEAR(concurrence(ch, HermitianOp(bloch_state(p.r.x, p.r.y, p.r.z))).C, level, 1e-8);
    }
  }
}

TEST(CylinderSamples, ZeroLevelAndOutOfRange) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(0.8, 0.6, 0.5, 0.4);
  const CylinderSamples zero = cylinder_samples(ch, 0.0, {16, 4});
  EXPECT_EQ(zero.points.size(), 4u);
  for (const auto& p : zero.points) EXPECT_NEAR(p.C, 0.0, 1e-12);
  EXPECT_TRUE(ThrowsKind(ErrorKind::kOutOfRange, [&] { cylinder_samples(ch, max_state_concurrence(ch) + 0.01); }));
  EXPECT_TRUE(ThrowsKind(ErrorKind::kOutOfRange, [&] { cylinder_samples(ch, -0.1); }));
}

TEST(CylinderSamples, DegenerateSheetIsFlat) {
  const double g = 0.5;
  const RankTwoChannel amp = RankTwoChannel::canonical_qubit(1.0, std::sqrt(1.0 - g), std::sqrt(g), 0.0);
  const CylinderSamples s = cylinder_samples(amp, 0.4, {12, 3});
  EXPECT_TRUE(s.degenerate);
  EXPECT_EQ(s.points.size(), 1u + 12u * 3u);
  for (const auto& p : s.points) {
    EXPECT_NEAR(p.C, 0.4, 1e-12);
    EXPECT_NEAR(p.r.z, s.points.front().r.z, 1e-14);
  }
  EXPECT_NEAR(s.max_concurrence, 1.0, 1e-15);
}

TEST(CylinderSamples, CsvFormat) {
  std::ostringstream out;
  write_samples_csv(out, {{{0.5, -0.0, 0.25}, 0.125}});
  EXPECT_EQ(out.str(), "rx,ry,rz,C\n0.5,0,0.25,0.125\n");
}

TEST(PsiPrimed, KrausOperatorsMapToPartners) {
  Rng rng = make_rng(89, 0);
  for (int rep = 0; rep < 30; ++rep) {
    const RankTwoChannel ch = random_canonical(rng, rep % 2 == 0);
    for (bool flip : {false, true}) {
      const PrimedVectors pv = psi_primed(ch, flip);
      const std::array<const CVector*, 2> in{&pv.psi1, &pv.psi2};
      const std::array<const CVector*, 2> out{&pv.psi1_out, &pv.psi2_out};
      for (std::size_t k = 0; k < 2; ++k) {
        EXPECT_TRUE(VectorNear(ch.kraus()[0] * std::span<const Complex>(*in[k]), scaled(*out[k], pv.alpha[k]), 1e-12));
        EXPECT_TRUE(VectorNear(ch.kraus()[1] * std::span<const Complex>(*in[k]), scaled(*out[k], pv.beta[k]), 1e-12));
      }
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          EXPECT_TRUE(MatrixNear(ch.apply(outer(*in[j], *in[k])), pv.r(j, k) * outer(*out[j], *out[k]), 1e-12));
    }
  }
}

}  // namespace
}  // namespace rank2
