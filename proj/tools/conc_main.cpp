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

// conc: command-line front end for rank-two channel concurrence.
//
//   conc concurrence  --channel FILE [--state SPEC]
//   conc entanglement --channel FILE [--state SPEC] [--base 2|e]
//   conc holevo       --channel FILE [--base 2|e] [--verify]
//   conc geometry     --channel FILE --levels 0.2,0.4 [--out DIR]
//   conc describe     --channel FILE
//   conc verify       [--seed N] [--size-factor F] [--timings]
//
// SPEC is a Bloch triple "rx,ry,rz" or a JSON matrix of [re, im] pairs.
// Exit codes: 0 ok, 1 failed property, 2 bad input, 3 math domain.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rank2/channel.hpp"
#include "rank2/channel_io.hpp"
#include "rank2/concurrence.hpp"
#include "rank2/entanglement.hpp"
#include "rank2/geometry.hpp"
#include "rank2/verify.hpp"

namespace {

using nlohmann::json;
using namespace rank2;

constexpr int kExitOk = 0;
constexpr int kExitProperty = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct RunConfig {
  std::string channel_path;
  std::string state_spec;
  std::string base = "2";
  std::uint64_t seed = 42;
  double size_factor = 1.0;
  std::string levels;
  std::string out_dir = ".";
  bool verify = false;
  bool timings = false;
};

EntropyBase parse_base(const std::string& b) { return b == "e" ? EntropyBase::kNats : EntropyBase::kBits; }

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.find_last_not_of(' ') + 1)
      throw Rank2Error(ErrorKind::kBadSpec, "cannot parse number '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Rank2Error(ErrorKind::kBadSpec, "empty number list");
  return out;
}

HermitianOp parse_state(const std::string& spec, std::size_t dim) {
  if (spec.empty()) return HermitianOp(Complex(1.0 / static_cast<double>(dim)) * ComplexMatrix::identity(dim));
  const auto first = spec.find_first_not_of(" \t");
  if (first != std::string::npos && spec[first] == '[') {
    json j;
    try {
      j = json::parse(spec);
    } catch (const json::parse_error& e) {
      throw Rank2Error(ErrorKind::kBadSpec, std::string("state matrix is not valid JSON: ") + e.what());
    }
    const ComplexMatrix m = matrix_from_json(j);
    if (m.rows() != dim || m.cols() != dim)
      throw Rank2Error(ErrorKind::kDimensionMismatch, "state matrix does not match the channel input dimension");
    return HermitianOp(m);
  }
  const std::vector<double> r = parse_list(spec);
  if (r.size() != 3) throw Rank2Error(ErrorKind::kBadSpec, "a Bloch vector needs three components");
  if (dim != 2) throw Rank2Error(ErrorKind::kDimensionMismatch, "Bloch vectors describe qubit inputs only");
  const BlochVector b{r[0], r[1], r[2]};
  if (b.norm() > 1.0 + 1e-12) throw Rank2Error(ErrorKind::kBadSpec, "Bloch vector lies outside the unit ball");
  return HermitianOp(from_bloch(1.0, b));
}

json bloch_json(const BlochVector& r) { return json::array({r.x, r.y, r.z}); }

json separable_json(const RankTwoChannel& ch) {
  if (!ch.is_qubit_length_two() || ch.frame().degenerate) return nullptr;
  const auto [p1, p2] = separable_vectors(ch);
  return json::array({vector_to_json(p1), vector_to_json(p2)});
}

json cmd_concurrence(const RunConfig& cfg) {
  const RankTwoChannel ch = load_channel_spec(cfg.channel_path);
  const HermitianOp x = parse_state(cfg.state_spec, ch.input_dim());
  json out;
  out["channel"] = ch.name();
  if (ch.length() != 2) {
    const LowerBound lb = lower_bound(ch, x);
    out["C"] = lb.pairwise;
    out["method"] = method_name(ConcurrenceMethod::kLowerBound);
    out["qubit_estimate"] = lb.qubit_estimate ? json(*lb.qubit_estimate) : json(nullptr);
    out["c_complex"] = nullptr;
    out["l1"] = nullptr;
    out["l2"] = nullptr;
    out["degenerate"] = nullptr;
    out["separable_vectors"] = nullptr;
    return out;
  }
  const ConcurrenceReport c = concurrence(ch, x);
  out["C"] = c.C;
  out["c_complex"] = c.c_complex ? complex_to_json(*c.c_complex) : json(nullptr);
  out["l1"] = c.l1 ? json(*c.l1) : json(nullptr);
  out["l2"] = c.l2 ? json(*c.l2) : json(nullptr);
  out["method"] = method_name(c.method);
  out["degenerate"] = c.degenerate;
  out["route_discrepancy"] = c.route_discrepancy;
  out["separable_vectors"] = separable_json(ch);
  return out;
}

json cmd_entanglement(const RunConfig& cfg) {
  const RankTwoChannel ch = load_channel_spec(cfg.channel_path);
  const HermitianOp x = parse_state(cfg.state_spec, ch.input_dim());
  const EntanglementReport e = entanglement(ch, x, parse_base(cfg.base));
  return {{"channel", ch.name()}, {"E", e.E},           {"y_plus", e.y_plus}, {"y_minus", e.y_minus},
          {"trace_out", e.trace_out}, {"C", e.C}, {"base", cfg.base}};
}

json cmd_holevo(const RunConfig& cfg) {
  const RankTwoChannel ch = load_channel_spec(cfg.channel_path);
  CapacityOptions co;
  co.base = parse_base(cfg.base);
  co.grid_oracle = cfg.verify;
  const CapacityResult cap = holevo_capacity(ch, co);
  json out = {{"channel", ch.name()},
              {"chi_star", cap.chi_star},
              {"argmax_bloch", bloch_json(cap.argmax)},
              {"method", cap.method},
              {"base", cfg.base}};
  out["plane_residual"] = cap.plane_residual ? json(*cap.plane_residual) : json(nullptr);
  if (cfg.verify) {
    out["grid_chi_star"] = *cap.grid_chi_star;
    out["grid_argmax_bloch"] = bloch_json(*cap.grid_argmax);
    out["max_deviation"] = *cap.deviation;
    out["both_reported"] = *cap.deviation > 1e-8;
  }
  return out;
}

json cmd_geometry(const RunConfig& cfg) {
  const RankTwoChannel ch = load_channel_spec(cfg.channel_path);
  const QubitFrame& frame = ch.frame();
  const std::vector<double> levels = parse_list(cfg.levels);
  std::filesystem::create_directories(cfg.out_dir);
  json out;
  out["channel"] = ch.name();
  out["degenerate"] = frame.degenerate;
  out["max_concurrence"] = max_state_concurrence(ch);
  out["separable_vectors"] = separable_json(ch);
  if (!frame.degenerate) {
    const ComplexMatrix dir = line_direction(ch);
    out["line_direction"] = {{"matrix", matrix_to_json(dir)}, {"bloch", bloch_json(to_bloch(dir).r)}};
  } else {
    out["line_direction"] = nullptr;
  }
  json files = json::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const CylinderSamples s = cylinder_samples(ch, levels[i]);
    const std::filesystem::path path = std::filesystem::path(cfg.out_dir) / ("level_" + std::to_string(i) + ".csv");
    std::ofstream f(path);
    if (!f) throw Rank2Error(ErrorKind::kBadSpec, "cannot write " + path.string());
    write_samples_csv(f, s.points);
    spdlog::info("wrote {} points for level {} to {}", s.points.size(), levels[i], path.string());
    files.push_back({{"level", levels[i]}, {"path", path.string()}, {"points", s.points.size()},
                     {"degenerate", s.degenerate}});
  }
  out["files"] = files;
  return out;
}

json cmd_describe(const RunConfig& cfg) {
  const RankTwoChannel ch = load_channel_spec(cfg.channel_path);
  json out = channel_to_json(ch);
  const ChannelPredicates p = ch.predicates();
  out["predicates"] = {{"trace_preserving", p.trace_preserving},
                       {"unital", p.unital},
                       {"doubly_stochastic", p.doubly_stochastic}};
  return out;
}

int cmd_verify(const RunConfig& cfg) {
  VerifyOptions vo;
  vo.seed = cfg.seed;
  vo.size_factor = cfg.size_factor;
  const std::vector<CheckResult> results = run_battery(vo);
  for (const auto& r : results)
    spdlog::info("{} {} metric={:.3e} tol={:.1e} ({:.2f}s)", r.passed ? "PASS" : "FAIL", r.name, r.metric,
                 r.tolerance, r.seconds);
  const json summary = summary_json(results, vo, cfg.timings);
  std::cout << summary.dump(2) << '\n';
  return summary["passed"].get<bool>() ? kExitOk : kExitProperty;
}

void setup_logging() {
  auto logger = spdlog::stderr_color_mt("conc");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* level = std::getenv("CONC_LOG");
  spdlog::set_level(level ? spdlog::level::from_str(level) : spdlog::level::warn);
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"Concurrence, entanglement and capacity of rank-two channels"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_channel = [&](CLI::App* sub) { sub->add_option("--channel", cfg.channel_path, "Channel spec JSON")->required(); };
  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--state", cfg.state_spec, "Bloch triple rx,ry,rz or JSON matrix (default: maximally mixed)");
  };
  auto add_base = [&](CLI::App* sub) {
    sub->add_option("--base", cfg.base, "Entropy base")->check(CLI::IsMember({"2", "e"}));
  };

  CLI::App* conc = app.add_subcommand("concurrence", "Concurrence of a state");
  add_channel(conc);
  add_state(conc);
  CLI::App* ent = app.add_subcommand("entanglement", "Entanglement of a state");
  add_channel(ent);
  add_state(ent);
  add_base(ent);
  CLI::App* hol = app.add_subcommand("holevo", "Maximized Holevo quantity");
  add_channel(hol);
  add_base(hol);
  hol->add_flag("--verify", cfg.verify, "Compare with the full Bloch-ball grid");
  CLI::App* geo = app.add_subcommand("geometry", "Constant-concurrence samples as CSV");
  add_channel(geo);
  geo->add_option("--levels", cfg.levels, "Comma-separated concurrence levels")->required();
  geo->add_option("--out", cfg.out_dir, "Output directory");
  CLI::App* desc = app.add_subcommand("describe", "Channel data and derived parameters");
  add_channel(desc);
  CLI::App* ver = app.add_subcommand("verify", "Run the property battery");
  ver->add_option("--seed", cfg.seed, "Seed");
  ver->add_option("--size-factor", cfg.size_factor, "Instance count multiplier")->check(CLI::PositiveNumber);
  ver->add_flag("--timings", cfg.timings, "Include timings in the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*ver) return cmd_verify(cfg);
    json out;
    if (*conc) out = cmd_concurrence(cfg);
    else if (*ent) out = cmd_entanglement(cfg);
    else if (*hol) out = cmd_holevo(cfg);
    else if (*geo) out = cmd_geometry(cfg);
    else out = cmd_describe(cfg);
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  } catch (const Rank2Error& e) {
    std::cerr << "conc: " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitDomain;
  } catch (const std::logic_error& e) {
    std::cerr << "conc: internal consistency check failed: " << e.what() << '\n';
    return kExitProperty;
  }
}
