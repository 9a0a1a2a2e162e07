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

#ifndef RANK2_ENTANGLEMENT_HPP
#define RANK2_ENTANGLEMENT_HPP

#include <array>
#include <optional>
#include <string>

#include "rank2/channel.hpp"
#include "rank2/concurrence.hpp"

namespace rank2 {

struct EntanglementReport {
  double E = 0.0;
  double y_plus = 0.0;
  double y_minus = 0.0;
  double trace_out = 0.0;
  double C = 0.0;
  EntropyBase base = EntropyBase::kBits;
};

/// sum_i eta(lambda_i(Y)) - eta(tr Y) over the clamped spectrum.
double scaled_entropy(const HermitianOp& y, EntropyBase base = EntropyBase::kBits);

/// E from the output trace and the concurrence: 2 y_+- = T +- sqrt(T^2 - C^2),
/// E = eta(y+) + eta(y-) - eta(T).
EntanglementReport entanglement_from_concurrence(double trace_out, double c, EntropyBase base);

/// Needs a trace-preserving length-two map; throws kWrongLength or
/// kNotTracePreserving. Other maps are served by the roof oracle.
EntanglementReport entanglement(const RankTwoChannel& channel, const HermitianOp& x,
                                EntropyBase base = EntropyBase::kBits);

/// S_sc(Phi(X)) - E(Phi; X).
double holevo_star(const RankTwoChannel& channel, const HermitianOp& x, EntropyBase base = EntropyBase::kBits);

/// Fast evaluation of a length-two qubit map on Bloch vectors of the input.
/// Output Bloch data and the complex linear form c are affine in r, so every
/// quantity reduces to a few multiplications and logarithms.
class QubitEvaluator {
 public:
  QubitEvaluator(const RankTwoChannel& channel, EntropyBase base);

  /// Output trace and Bloch vector of Phi((tI + r.sigma)/2) for t = 1.
  BlochForm output(const BlochVector& r) const;
  double output_entropy(const BlochVector& r) const;
  double concurrence(const BlochVector& r) const;
  double entanglement(const BlochVector& r) const;
  double holevo_star(const BlochVector& r) const { return output_entropy(r) - entanglement(r); }

 private:
  EntropyBase base_;
  double t0_;
  std::array<double, 3> tr_;
  BlochVector r0_;
  std::array<BlochVector, 3> rr_;
  Complex c0_;
  std::array<Complex, 3> cr_;
};

struct CapacityOptions {
  EntropyBase base = EntropyBase::kBits;
  std::size_t angle_grid = 64;
  /// Also run the full Bloch-ball grid (resolution^3 cube points) and report
  /// the deviation from the main route.
  bool grid_oracle = false;
  std::size_t grid_resolution = 200;
};

struct CapacityResult {
  double chi_star = 0.0;
  BlochVector argmax;          // input Bloch vector of the maximizing state
  ComplexMatrix argmax_state;
  std::string method;          // "restricted", "line" or "grid"
  /// |z0* w01 z1 + z1* w10 z0| in frame coordinates, non-degenerate maps.
  std::optional<double> plane_residual;
  std::optional<double> grid_chi_star;
  std::optional<BlochVector> grid_argmax;
  std::optional<double> deviation;
};

/// Non-degenerate maps: maximize S(Phi((pi + theta pi theta)/2)) - S(Phi(pi))
/// over pure pi (angle grid, then simplex refinement). Degenerate canonical
/// maps: golden-section search on the frame z axis. Other degenerate maps use
/// the full grid. Needs a trace-preserving length-two qubit map.
CapacityResult holevo_capacity(const RankTwoChannel& channel, const CapacityOptions& options = {});

struct GridMaximum {
  double value = 0.0;
  BlochVector r;
};

/// Maximum of chi* over the Bloch ball: resolution^3 cube grid restricted to
/// the ball, then a simplex polish from the best grid point.
GridMaximum grid_capacity(const QubitEvaluator& evaluator, std::size_t resolution);

}  // namespace rank2

#endif  // RANK2_ENTANGLEMENT_HPP
