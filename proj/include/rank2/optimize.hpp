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

// Small derivative-free optimizers used by the capacity search.

#ifndef RANK2_OPTIMIZE_HPP
#define RANK2_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace rank2 {

struct MinimizeResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
};

struct NelderMeadOptions {
  double initial_step = 0.05;
  double x_tol = 1e-12;
  double f_tol = 1e-15;
  int max_iterations = 2000;
};

/// Minimizes f from x0 with the standard reflect/expand/contract/shrink
/// simplex. Deterministic.
MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                           std::vector<double> x0, const NelderMeadOptions& options = {});

/// Minimizes a unimodal f on [lo, hi] by golden-section search.
MinimizeResult golden_section(const std::function<double(double)>& f, double lo, double hi, double tol = 1e-12);

}  // namespace rank2

#endif  // RANK2_OPTIMIZE_HPP
