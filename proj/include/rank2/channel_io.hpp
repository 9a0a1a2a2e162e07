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

// Channel spec files:
//
//   {"name": "amp_damp", "q": 0.25,
//    "kraus": [ [[[re, im], [re, im]], [[re, im], [re, im]]], ... ]}
//
// "kraus" is a list of 2 x d matrices, each a list of rows, each row a list
// of [re, im] pairs. "name" is a string and "q" an optional number. The
// writer adds derived data for length-two qubit maps: "canonical" (canonical
// parameters, canonical Kraus form only) and "vartheta". The reader skips
// those two keys and rejects every other unknown key.

#ifndef RANK2_CHANNEL_IO_HPP
#define RANK2_CHANNEL_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "rank2/channel.hpp"

namespace rank2 {

RankTwoChannel channel_from_json(const nlohmann::json& spec);
RankTwoChannel parse_channel_spec(std::string_view text);
RankTwoChannel load_channel_spec(const std::string& path);

nlohmann::json channel_to_json(const RankTwoChannel& channel, bool include_derived = true);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const ComplexMatrix& m);
/// Parses a list of rows of [re, im] pairs; throws kBadSpec on shape errors.
ComplexMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(std::span<const Complex> v);

}  // namespace rank2

#endif  // RANK2_CHANNEL_IO_HPP
