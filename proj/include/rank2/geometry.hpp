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

// Bloch-space geometry of constant concurrence for length-two qubit maps.
// Everything is computed in operator form; Bloch coordinates are produced
// only for output.

#ifndef RANK2_GEOMETRY_HPP
#define RANK2_GEOMETRY_HPP

#include <array>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "rank2/channel.hpp"
#include "rank2/concurrence.hpp"

namespace rank2 {

/// The input conjugation: diag(z0/z0*, -z1/z1*) in the frame. It equals the
/// polar conjugation of the derived operator. Throws kDegenerate.
AntilinearOp theta_in(const RankTwoChannel& channel);

/// The output conjugation diag(a00 b01/|a00 b01|, -a11 b10/|a11 b10|) for a
/// canonical, non-degenerate channel. With it
///   theta' A theta = (b01 b10/|b01 b10|) A,
///   theta' B theta = -(a00 a11/|a00 a11|) B.
/// Throws kNotCanonical or kDegenerate.
AntilinearOp theta_out(const RankTwoChannel& channel);

/// theta o X^dagger o theta, i.e. matrix M X^T conj(M). Equals
/// conj_sandwich(theta, X) for Hermitian X.
ComplexMatrix reflect(const AntilinearOp& theta, const ComplexMatrix& x);

/// The traceless Hermitian direction ((0, z0 z1*), (z0* z1, 0)) of the lines
/// of constant concurrence, in reference coordinates.
ComplexMatrix line_direction(const RankTwoChannel& channel);

struct ConstantConcurrenceLine {
  ComplexMatrix base;
  ComplexMatrix direction;
  BlochForm base_bloch;
  BlochVector direction_bloch;
  double concurrence = 0.0;
  /// Present when the base is a density operator: the parameters t with
  /// base + t direction pure, and the corresponding Bloch vectors.
  std::optional<std::pair<double, double>> endpoint_params;
  std::optional<std::pair<BlochVector, BlochVector>> endpoints;

  ComplexMatrix point(double t) const;
};

/// Throws kDegenerate: degenerate maps have planes, not lines, of constant C.
ConstantConcurrenceLine constant_line(const RankTwoChannel& channel, const HermitianOp& x);

/// X + t1 |psi1><psi1| + t2 |psi2><psi2| with the unnormalized separable
/// vectors psi_{1,2} = z1*|0> +- z0*|1> of the frame.
ComplexMatrix plane_point(const RankTwoChannel& channel, const ComplexMatrix& x, double t1, double t2);

struct SamplePoint {
  BlochVector r;
  double C = 0.0;
};

struct CylinderOptions {
  std::size_t angles = 64;  // points around the ellipse (or disk rings)
  std::size_t sweeps = 16;  // positions along the line direction (or radii)
};

struct CylinderSamples {
  std::vector<SamplePoint> points;
  bool degenerate = false;
  double max_concurrence = 0.0;
};

/// The largest concurrence over density operators, 2 max(|z0|^2, |z1|^2).
double max_state_concurrence(const RankTwoChannel& channel);

/// Samples of {omega : C(Phi; omega) = c} for density operators omega.
/// Non-degenerate maps: angles x sweeps points on the ellipse cylinder,
/// swept along the line direction inside the Bloch ball. Degenerate maps:
/// the flat level-set sheet, sampled on a polar grid. Every point is
/// re-evaluated through concurrence(). Throws kOutOfRange above the maximum.
CylinderSamples cylinder_samples(const RankTwoChannel& channel, double c, const CylinderOptions& options = {});

void write_samples_csv(std::ostream& out, const std::vector<SamplePoint>& points);

struct PrimedVectors {
  CVector psi1, psi2;              // z1*|0> +- z0*|1>, unnormalized
  CVector psi1_out, psi2_out;      // sqrt(a00 b01)|0> +- sqrt(a11 b10)|1>
  std::array<Complex, 2> alpha{};  // A psi_k = alpha_k psi_k'
  std::array<Complex, 2> beta{};   // B psi_k = beta_k psi_k'
  ComplexMatrix r;                 // Phi(|psi_j><psi_k|) = r_jk |psi_j'><psi_k'|
};

/// Output-side partners of the separable vectors for a canonical,
/// non-degenerate channel. The branch of sqrt(a11 b10) is aligned so that
/// A psi_k is proportional to psi_k'; flip_first_branch negates
/// sqrt(a00 b01) before alignment.
PrimedVectors psi_primed(const RankTwoChannel& channel, bool flip_first_branch = false);

}  // namespace rank2

#endif  // RANK2_GEOMETRY_HPP
