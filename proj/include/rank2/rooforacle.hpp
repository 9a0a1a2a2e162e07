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

// Brute-force convex-roof minimization over pure-state decompositions
//   X = sum_j |psi_j><psi_j|,  psi_j = sum_k u_jk sqrt(lambda_k) e_k,
// with u an n x r isometry and X = sum_k lambda_k |e_k><e_k|.

#ifndef RANK2_ROOFORACLE_HPP
#define RANK2_ROOFORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rank2/channel.hpp"

namespace rank2 {

/// A functional on unnormalized pure inputs, evaluated as leaf(|psi><psi|).
using Leaf = std::function<double(std::span<const Complex>)>;

/// 2 sqrt(det Phi(|psi><psi|)), from the applied output directly.
Leaf concurrence_leaf(const RankTwoChannel& channel);
/// S_sc(Phi(|psi><psi|)).
Leaf entropy_leaf(const RankTwoChannel& channel, EntropyBase base = EntropyBase::kBits);
/// C(|psi><psi|)^2 / <psi, psi>. Its roof is at least C(X)^2 and equals it
/// exactly when X has an optimal decomposition of constant concurrence.
Leaf squared_concurrence_leaf(const RankTwoChannel& channel);

struct Ensemble {
  std::vector<CVector> vectors;
};

/// || sum_j |psi_j><psi_j| - X ||_max.
double decomposition_residual(const Ensemble& ensemble, const ComplexMatrix& x);
double ensemble_value(const Leaf& leaf, const Ensemble& ensemble);

struct RoofOptions {
  /// Largest ensemble size; 0 picks 4 for d = 2 and d + 2 otherwise.
  std::size_t n_max = 0;
  std::size_t restarts = 32;
  std::uint64_t seed = 0;
  std::size_t max_iterations = 4000;
  /// Optional starting decomposition; its value bounds the result.
  std::optional<Ensemble> initial;
};

struct RoofResult {
  double value = 0.0;
  Ensemble ensemble;
  std::size_t rank = 0;
  double residual = 0.0;
  std::size_t evaluations = 0;
  /// Best value per ensemble size rank, rank + 1, ..., n_max.
  std::vector<double> ladder;
};

/// Sizes n = rank .. n_max are searched in turn, each warm-started from the
/// previous optimum padded with a zero member, so the value never increases
/// with n_max. Restarts use seeds split from (seed, n, restart). Leaves are
/// taken to be degree-one homogeneous, which makes rank-one inputs exact.
/// Members of negligible weight are dropped from the returned ensemble.
RoofResult roof_min(const Leaf& leaf, const HermitianOp& x, const RoofOptions& options = {});

struct FlatnessReport {
  double c_roof = 0.0;
  /// Max spread of C(psi_j / |psi_j|) over the concurrence-leaf optimum.
  /// Optimal ensembles of that leaf are not unique, so this is informational.
  double concurrence_leaf_spread = 0.0;
  double squared_roof = 0.0;
  /// Max spread of C(psi_j / |psi_j|) over the squared-leaf optimum.
  double spread = 0.0;
  /// |sqrt(squared_roof) - c_roof|.
  double gap = 0.0;
  bool passed = false;
};

/// Members with weight below 1e-9 tr X are ignored when measuring spreads.
FlatnessReport flatness_check(const RankTwoChannel& channel, const HermitianOp& x, double tolerance,
                              const RoofOptions& options = {});

}  // namespace rank2

#endif  // RANK2_ROOFORACLE_HPP
