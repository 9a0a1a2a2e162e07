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

// Property battery shared by the command-line verifier and the acceptance
// tests. Each check draws its own instances from (seed, check index).

#ifndef RANK2_VERIFY_HPP
#define RANK2_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "rank2/matcore.hpp"

namespace rank2 {

struct VerifyOptions {
  std::uint64_t seed = 42;
  /// Multiplies every instance count (at least one instance is kept).
  double size_factor = 1.0;
};

/// One verify check. A check that throws is reported as failed with the
/// message under details["error"].
struct CheckResult {
  std::string name;
  bool passed = false;
  double metric = 0.0;     // worst observed error or violation
  double tolerance = 0.0;
  std::size_t instances = 0;
  double seconds = 0.0;
  nlohmann::json details = nlohmann::json::object();
};

/// Two-qubit concurrence max{0, l1 - l2 - l3 - l4}, l the square roots of
/// the eigenvalues of rho (sy x sy) conj(rho) (sy x sy), computed with an
/// independent linear-algebra library.
double wootters_concurrence(const ComplexMatrix& rho);

CheckResult check_determinant_identity(const VerifyOptions& options);
CheckResult check_closed_form_vs_roof(const VerifyOptions& options);
CheckResult check_wootters_agreement(const VerifyOptions& options);
CheckResult check_flatness(const VerifyOptions& options);
CheckResult check_entanglement_closed_form(const VerifyOptions& options);
CheckResult check_conjugation_identities(const VerifyOptions& options);
CheckResult check_holevo_restriction(const VerifyOptions& options);
CheckResult check_lower_bounds(const VerifyOptions& options);
CheckResult check_constant_lines(const VerifyOptions& options);
CheckResult check_phase_damping_scaling(const VerifyOptions& options);

CheckResult check_derivative_identity(const VerifyOptions& options);
CheckResult check_separable_vectors(const VerifyOptions& options);
CheckResult check_kraus_remixing(const VerifyOptions& options);
CheckResult check_primed_vectors(const VerifyOptions& options);
CheckResult check_holevo_symmetry(const VerifyOptions& options);

/// The ten acceptance checks, in order.
std::vector<CheckResult> run_acceptance(const VerifyOptions& options);
/// Acceptance checks followed by the supplementary properties.
std::vector<CheckResult> run_battery(const VerifyOptions& options);

/// Machine-readable summary; timings are left out unless asked for, so equal
/// seeds give byte-identical output.
nlohmann::json summary_json(const std::vector<CheckResult>& results, const VerifyOptions& options,
                            bool include_timings = false);

}  // namespace rank2

#endif  // RANK2_VERIFY_HPP
