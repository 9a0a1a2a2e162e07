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

#include "rank2/channel_io.hpp"

#include <fstream>
#include <sstream>

namespace rank2 {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Rank2Error(ErrorKind::kBadSpec, what); }

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    bad("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) bad("a matrix must be a non-empty list of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be non-empty lists");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must all have the same length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json vector_to_json(std::span<const Complex> v) {
  json out = json::array();
  for (const auto& z : v) out.push_back(complex_to_json(z));
  return out;
}

RankTwoChannel channel_from_json(const json& spec) {
  if (!spec.is_object()) bad("channel spec must be a JSON object");
  for (const auto& [key, value] : spec.items()) {
    if (key != "kraus" && key != "name" && key != "q" && key != "canonical" && key != "vartheta")
      bad("unknown key '" + key + "' in channel spec");
  }
  if (!spec.contains("kraus") || !spec["kraus"].is_array() || spec["kraus"].empty())
    bad("channel spec needs a non-empty \"kraus\" list");
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : spec["kraus"]) {
    ComplexMatrix m = matrix_from_json(k);
    if (m.rows() != 2) bad("every Kraus operator needs exactly 2 rows");
    if (!kraus.empty() && m.cols() != kraus.front().cols()) bad("Kraus operators must share one shape");
    if (m.cols() < 1 || m.cols() > kMaxDim) bad("Kraus operators need between 1 and 8 columns");
    kraus.push_back(std::move(m));
  }
  std::string name;
  if (spec.contains("name")) {
    if (!spec["name"].is_string()) bad("\"name\" must be a string");
    name = spec["name"].get<std::string>();
  }
  std::optional<double> q;
  if (spec.contains("q") && !spec["q"].is_null()) {
    if (!spec["q"].is_number()) bad("\"q\" must be a number");
    q = spec["q"].get<double>();
  }
  return RankTwoChannel(std::move(kraus), std::move(name), q);
}

RankTwoChannel parse_channel_spec(std::string_view text) {
  json spec;
  try {
    spec = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("channel spec is not valid JSON: ") + e.what());
  }
  return channel_from_json(spec);
}

RankTwoChannel load_channel_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open channel spec '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_channel_spec(buffer.str());
}

json channel_to_json(const RankTwoChannel& channel, bool include_derived) {
  json out;
  out["name"] = channel.name();
  json kraus = json::array();
  for (const auto& k : channel.kraus()) kraus.push_back(matrix_to_json(k));
  out["kraus"] = std::move(kraus);
  if (channel.q()) out["q"] = *channel.q();
  if (!include_derived || !channel.is_qubit_length_two()) return out;
  if (const auto& c = channel.canonical()) {
    out["canonical"] = {
        {"a00", complex_to_json(c->a00)},   {"a11", complex_to_json(c->a11)},
        {"b01", complex_to_json(c->b01)},   {"b10", complex_to_json(c->b10)},
        {"z0sq", complex_to_json(c->z0sq)}, {"z1sq", complex_to_json(c->z1sq)},
        {"z0", complex_to_json(c->z0)},     {"z1", complex_to_json(c->z1)},
        {"degenerate", c->degenerate},
    };
  }
  out["vartheta"] = matrix_to_json(channel.vartheta().matrix());
  return out;
}

}  // namespace rank2
