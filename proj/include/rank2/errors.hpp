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

#ifndef RANK2_ERRORS_HPP
#define RANK2_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rank2 {

enum class ErrorKind {
  kNotHermitian,
  kNotPsd,
  kDimensionMismatch,
  kNegativeArgument,
  kDegenerate,
  kNotDegenerate,
  kWrongLength,
  kNotTracePreserving,
  kOutOfRange,
  kLinearlyDependent,
  kNotCanonical,
  kBadSpec,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so that front ends can
/// map it onto an exit code without parsing messages.
class Rank2Error : public std::runtime_error {
 public:
  Rank2Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

  /// True for input-validation failures (malformed specs), false for
  /// mathematical domain failures.
  bool is_input_error() const noexcept;

 private:
  ErrorKind kind_;
};

}  // namespace rank2

#endif  // RANK2_ERRORS_HPP
