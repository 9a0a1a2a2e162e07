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

#include "rank2/rooforacle.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "rank2/concurrence.hpp"
#include "rank2/entanglement.hpp"
#include "rank2/sampling.hpp"
#include "test_support.hpp"

namespace rank2 {
namespace {

using test::bloch_state;
using test::ThrowsKind;

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Eigenvector decomposition X = sum_k |sqrt(l_k) e_k><sqrt(l_k) e_k|.
Ensemble spectral_ensemble(const HermitianOp& x) {
  const EigenDecomposition ed = hermitian_eigen(x.matrix());
  Ensemble e;
  for (std::size_t k = 0; k < ed.values.size(); ++k)
    if (ed.values[k] > 1e-14) e.vectors.push_back(scaled(ed.vectors.col(k), std::sqrt(ed.values[k])));
  return e;
}

TEST(Ensemble, ResidualAndValue) {
  const Ensemble e{{CVector{1.0, 0.0}, CVector{0.0, 0.5}}};
  EXPECT_NEAR(decomposition_residual(e, ComplexMatrix::diagonal(CVector{1.0, 0.25})), 0.0, 1e-16);
  EXPECT_NEAR(decomposition_residual(e, ComplexMatrix::identity(2)), 0.75, 1e-16);
  const Leaf norm2 = [](std::span<const Complex> v) { return std::norm(v[0]) + std::norm(v[1]); };
  EXPECT_NEAR(ensemble_value(norm2, e), 1.25, 1e-16);
}

TEST(Leaves, MatchDirectFormulas) {
  Rng rng = make_rng(121, 0);
  for (int rep = 0; rep < 20; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2 + rep % 2, 3, true);
    const CVector psi = scaled(random_unit_vector(rng, 3), 0.7);
    const ComplexMatrix out = ch.apply(outer(psi, psi));
    const double c = 2.0 * std::sqrt(std::max(0.0, out.determinant().real()));
    EXPECT_NEAR(concurrence_leaf(ch)(psi), c, 1e-12);
    EXPECT_NEAR(squared_concurrence_leaf(ch)(psi), c * c / 0.49, 1e-12);
    EXPECT_NEAR(entropy_leaf(ch)(psi), scaled_entropy(HermitianOp(out)), 1e-12);
  }
}

TEST(RoofMin, RankOneIsSingleElement) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(0.8, 0.6, 0.5, 0.4);
  const CVector psi{0.6, Complex(0.0, 0.8)};
  const HermitianOp x(outer(psi, psi));
  const RoofResult r = roof_min(concurrence_leaf(ch), x);
  ASSERT_EQ(r.ensemble.vectors.size(), 1u);
  EXPECT_EQ(r.rank, 1u);
  EXPECT_NEAR(r.value, concurrence_leaf(ch)(psi), 1e-14);
  EXPECT_LT(r.residual, 1e-14);
}

TEST(RoofMin, ConcurrenceLeafMatchesClosedForm) {
  Rng rng = make_rng(122, 0);
  for (int rep = 0; rep < 10; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, rep % 2 == 0);
    const HermitianOp x(random_density(rng, 2, 2));
    RoofOptions opts;
    opts.seed = static_cast<std::uint64_t>(rep);
    const RoofResult r = roof_min(concurrence_leaf(ch), x, opts);
    EXPECT_NEAR(r.value, concurrence(ch, x).C, 1e-5);
    EXPECT_LT(r.residual, 1e-10);
    EXPECT_NEAR(decomposition_residual(r.ensemble, x.matrix()), r.residual, 1e-15);
  }
}

TEST(RoofMin, EntropyLeafUnderPartialTrace) {
  const RankTwoChannel half = RankTwoChannel::phase_damping(0.5);
  Rng rng = make_rng(123, 0);
  const HermitianOp x(random_density(rng, 4, 2));
  RoofOptions opts;
  opts.restarts = 16;
  const RoofResult r = roof_min(entropy_leaf(half), x, opts);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_NEAR(r.value, entanglement(half, x).E, 1e-4);
}

TEST(RoofMin, NeverWorseThanSuppliedDecomposition) {
  Rng rng = make_rng(124, 0);
  for (int rep = 0; rep < 5; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 3, 3, false);
    const HermitianOp x(random_density(rng, 3, 3));
    const Ensemble spectral = spectral_ensemble(x);
    ASSERT_LT(decomposition_residual(spectral, x.matrix()), 1e-12);
    RoofOptions opts;
    opts.restarts = 4;
    opts.seed = static_cast<std::uint64_t>(rep);
    opts.initial = spectral;
    const Leaf leaf = concurrence_leaf(ch);
    const RoofResult r = roof_min(leaf, x, opts);
    EXPECT_LE(r.value, ensemble_value(leaf, spectral) + 1e-12);
    EXPECT_LT(r.residual, 1e-10);
  }
}

TEST(RoofMin, MonotoneInEnsembleSize) {
  Rng rng = make_rng(125, 0);
  const RankTwoChannel ch = random_channel(rng, 2, 2, true);
  const HermitianOp x(random_density(rng, 2, 2));
  const Leaf leaf = entropy_leaf(ch);
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t n : {2u, 3u, 4u}) {
    RoofOptions opts;
    opts.n_max = n;
    opts.restarts = 8;
    const RoofResult r = roof_min(leaf, x, opts);
    EXPECT_LE(r.value, previous);
    for (std::size_t k = 1; k < r.ladder.size(); ++k) EXPECT_LE(r.ladder[k], r.ladder[k - 1]);
    previous = r.value;
  }
}

TEST(RoofMin, DeterministicForFixedSeed) {
  Rng rng = make_rng(126, 0);
  const RankTwoChannel ch = random_channel(rng, 2, 2, false);
  const HermitianOp x(random_density(rng, 2, 2));
  RoofOptions opts;
  opts.restarts = 4;
  opts.seed = 99;
  const RoofResult a = roof_min(concurrence_leaf(ch), x, opts);
  const RoofResult b = roof_min(concurrence_leaf(ch), x, opts);
  EXPECT_EQ(a.value, b.value);
  ASSERT_EQ(a.ensemble.vectors.size(), b.ensemble.vectors.size());
  for (std::size_t j = 0; j < a.ensemble.vectors.size(); ++j) EXPECT_EQ(a.ensemble.vectors[j], b.ensemble.vectors[j]);
}

TEST(RoofMin, RejectsNonPsd) {
  const RankTwoChannel ch = RankTwoChannel::canonical_qubit(0.8, 0.6, 0.5, 0.4);
  EXPECT_TRUE(ThrowsKind(ErrorKind::kNotPsd,
                         [&] { roof_min(concurrence_leaf(ch), HermitianOp(ComplexMatrix::diagonal(CVector{1.0, -0.3}))); }));
}

TEST(Flatness, NonDegenerateChannels) {
  Rng rng = make_rng(127, 0);
  for (int rep = 0; rep < 5; ++rep) {
    const RankTwoChannel ch = random_channel(rng, 2, 2, rep % 2 == 0);
    const HermitianOp x(random_density(rng, 2, 2));
    RoofOptions opts;
    opts.seed = static_cast<std::uint64_t>(rep);
    const FlatnessReport f = flatness_check(ch, x, 1e-4, opts);
    EXPECT_TRUE(f.passed) << "spread " << f.spread << " gap " << f.gap;
    EXPECT_LT(f.spread, 1e-4);
    EXPECT_NEAR(f.c_roof, concurrence(ch, x).C, 1e-5);
  }
}

TEST(Flatness, ZeroLineMembersHaveZeroLeaf) {
  const RankTwoChannel sym = RankTwoChannel::canonical_qubit(kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2);
  const HermitianOp x(bloch_state(0.5, 0.0, 0.0));
  const Leaf leaf = concurrence_leaf(sym);
  const RoofResult r = roof_min(leaf, x);
  EXPECT_NEAR(r.value, 0.0, 1e-5);
  for (const auto& v : r.ensemble.vectors) EXPECT_LE(leaf(v), 1e-5);
}

TEST(Flatness, DegenerateRoofIsLinear) {
  const RankTwoChannel amp = RankTwoChannel::canonical_qubit(1.0, std::sqrt(0.6), std::sqrt(0.4), 0.0);
  Rng rng = make_rng(128, 0);
  const HermitianOp x(random_density(rng, 2, 2));
  const Leaf leaf = concurrence_leaf(amp);
  const RoofResult r = roof_min(leaf, x);
  double sum = 0.0;
  for (const auto& v : r.ensemble.vectors) {
    const double lin = concurrence_degenerate(amp, HermitianOp(outer(v, v)));
    EXPECT_NEAR(leaf(v), lin, 1e-12);
    sum += lin;
  }
  EXPECT_NEAR(sum, concurrence(amp, x).C, 1e-10);
  // Every decomposition gives the same value for a linear roof.
  EXPECT_NEAR(ensemble_value(leaf, spectral_ensemble(x)), concurrence(amp, x).C, 1e-12);
}

}  // namespace
}  // namespace rank2
