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

#include "rank2/errors.hpp"

namespace rank2 {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotHermitian: return "NotHermitian";
    case ErrorKind::kNotPsd: return "NotPSD";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kNegativeArgument: return "NegativeArgument";
    case ErrorKind::kDegenerate: return "Degenerate";
    case ErrorKind::kNotDegenerate: return "NotDegenerate";
    case ErrorKind::kWrongLength: return "WrongLength";
    case ErrorKind::kNotTracePreserving: return "NotTracePreserving";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kLinearlyDependent: return "LinearlyDependent";
    case ErrorKind::kNotCanonical: return "NotCanonical";
    case ErrorKind::kBadSpec: return "BadSpec";
  }
  return "Unknown";
}

Rank2Error::Rank2Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

bool Rank2Error::is_input_error() const noexcept {
  return kind_ == ErrorKind::kBadSpec || kind_ == ErrorKind::kLinearlyDependent ||
         kind_ == ErrorKind::kDimensionMismatch;
}

}  // namespace rank2
