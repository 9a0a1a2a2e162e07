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

#include "rank2/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rank2/geometry.hpp"
#include "rank2/optimize.hpp"

namespace rank2 {

namespace {

void require_trace_preserving(const RankTwoChannel& channel) {
  if (!channel.predicates().trace_preserving)
    throw Rank2Error(ErrorKind::kNotTracePreserving, "this quantity needs a trace-preserving map");
}

double entropy_from_bloch(double t, double rnorm, EntropyBase base) {
  const double lp = std::max(0.0, 0.5 * (t + rnorm));
  const double lm = std::max(0.0, 0.5 * (t - rnorm));
  return eta(lp, base) + eta(lm, base) - eta(std::max(0.0, t), base);
}

BlochVector sphere_point(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

BlochVector clamp_to_ball(const std::vector<double>& x) {
  BlochVector r{x[0], x[1], x[2]};
  const double n = r.norm();
  return n > 1.0 ? (1.0 / n) * r : r;
}

}  // namespace

double scaled_entropy(const HermitianOp& y, EntropyBase base) {
  const std::vector<double> lam = eig_psd(y);
  double total = 0.0, s = 0.0;
  for (double v : lam) {
    total += v;
    s += eta(v, base);
  }
  return s - eta(total, base);
}

EntanglementReport entanglement_from_concurrence(double trace_out, double c, EntropyBase base) {
  EntanglementReport out;
  out.trace_out = trace_out;
  out.C = c;
  out.base = base;
  const double t = std::max(0.0, trace_out);
  const double cc = std::min(std::max(0.0, c), t);
  out.y_plus = 0.5 * (t + std::sqrt(std::max(0.0, t * t - cc * cc)));
  // y+ y- = C^2 / 4 keeps y- accurate when C is small.
  out.y_minus = out.y_plus > 0.0 ? std::max(0.0, t - out.y_plus) : 0.0;
  if (out.y_plus > 0.0 && cc < 0.5 * t) out.y_minus = 0.25 * cc * cc / out.y_plus;
  out.E = std::max(0.0, eta(out.y_plus, base) + eta(out.y_minus, base) - eta(out.y_plus + out.y_minus, base));
  return out;
}

EntanglementReport entanglement(const RankTwoChannel& channel, const HermitianOp& x, EntropyBase base) {
  if (channel.length() != 2) throw Rank2Error(ErrorKind::kWrongLength, "entanglement needs a length-two map");
  require_trace_preserving(channel);
  const ConcurrenceReport c = concurrence(channel, x);
  const double t = channel.apply(x.matrix()).trace().real();
  return entanglement_from_concurrence(t, c.C, base);
}

double holevo_star(const RankTwoChannel& channel, const HermitianOp& x, EntropyBase base) {
  const EntanglementReport e = entanglement(channel, x, base);
  return scaled_entropy(HermitianOp(channel.apply(x.matrix())), base) - e.E;
}

QubitEvaluator::QubitEvaluator(const RankTwoChannel& channel, EntropyBase base) : base_(base) {
  const QubitFrame& frame = channel.frame();
  const ComplexMatrix half_identity = from_bloch(1.0, {});
  const BlochForm f0 = to_bloch(channel.apply(half_identity));
  t0_ = f0.trace;
  r0_ = f0.r;
  c0_ = closed_form_c(frame, half_identity);
  const std::array<BlochVector, 3> axes{BlochVector{1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, 0, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    const ComplexMatrix e = from_bloch(0.0, axes[i]);
    const BlochForm fi = to_bloch(channel.apply(e));
    tr_[i] = fi.trace;
    rr_[i] = fi.r;
    cr_[i] = closed_form_c(frame, e);
  }
}

BlochForm QubitEvaluator::output(const BlochVector& r) const {
  BlochForm f;
  f.trace = t0_ + tr_[0] * r.x + tr_[1] * r.y + tr_[2] * r.z;
  f.r = r0_ + r.x * rr_[0] + r.y * rr_[1] + r.z * rr_[2];
  return f;
}

double QubitEvaluator::output_entropy(const BlochVector& r) const {
  const BlochForm f = output(r);
  return entropy_from_bloch(f.trace, f.r.norm(), base_);
}

double QubitEvaluator::concurrence(const BlochVector& r) const {
  return std::abs(c0_ + cr_[0] * r.x + cr_[1] * r.y + cr_[2] * r.z);
}

double QubitEvaluator::entanglement(const BlochVector& r) const {
  const double t = t0_ + tr_[0] * r.x + tr_[1] * r.y + tr_[2] * r.z;
  return entanglement_from_concurrence(t, concurrence(r), base_).E;
}

GridMaximum grid_capacity(const QubitEvaluator& evaluator, std::size_t resolution) {
  const std::size_t n = std::max<std::size_t>(resolution, 2);
  const double step = 2.0 / static_cast<double>(n - 1);
  GridMaximum best{-1.0, {}};
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -1.0 + step * static_cast<double>(i);
    for (std::size_t j = 0; j < n; ++j) {
      const double y = -1.0 + step * static_cast<double>(j);
      if (x * x + y * y > 1.0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const double z = -1.0 + step * static_cast<double>(k);
        if (x * x + y * y + z * z > 1.0) continue;
        const BlochVector r{x, y, z};
        const double v = evaluator.holevo_star(r);
        if (v > best.value) best = {v, r};
      }
    }
  }
  NelderMeadOptions nm;
  nm.initial_step = step;
  const MinimizeResult polish = nelder_mead(
      [&](const std::vector<double>& p) { return -evaluator.holevo_star(clamp_to_ball(p)); },
      {best.r.x, best.r.y, best.r.z}, nm);
  if (-polish.value > best.value) best = {-polish.value, clamp_to_ball(polish.x)};
  return best;
}

CapacityResult holevo_capacity(const RankTwoChannel& channel, const CapacityOptions& options) {
  const QubitFrame& frame = channel.frame();
  require_trace_preserving(channel);
  const QubitEvaluator ev(channel, options.base);
  CapacityResult out;

  if (!frame.degenerate) {
    const AntilinearOp theta = theta_in(channel);
    // theta X theta acts on Bloch vectors as a fixed linear map.
    std::array<BlochVector, 3> refl;
    const std::array<BlochVector, 3> axes{BlochVector{1, 0, 0}, BlochVector{0, 1, 0}, BlochVector{0, 0, 1}};
    for (std::size_t i = 0; i < 3; ++i) refl[i] = to_bloch(conj_sandwich(theta, from_bloch(0.0, axes[i]))).r;
    auto mid = [&](const BlochVector& nvec) {
      const BlochVector tn = nvec.x * refl[0] + nvec.y * refl[1] + nvec.z * refl[2];
      return 0.5 * (nvec + tn);
    };
    auto objective = [&](double polar, double azimuth) {
      const BlochVector nvec = sphere_point(polar, azimuth);
      return ev.output_entropy(mid(nvec)) - ev.output_entropy(nvec);
    };
    const std::size_t g = std::max<std::size_t>(options.angle_grid, 2);
    const double dpol = std::numbers::pi / static_cast<double>(g);
    const double daz = 2.0 * std::numbers::pi / static_cast<double>(g);
    double best = -1.0, best_pol = 0.0, best_az = 0.0;
    for (std::size_t i = 0; i < g; ++i)
      for (std::size_t j = 0; j < g; ++j) {
        const double pol = (static_cast<double>(i) + 0.5) * dpol, az = static_cast<double>(j) * daz;
        const double v = objective(pol, az);
        if (v > best) {
          best = v;
          best_pol = pol;
          best_az = az;
        }
      }
    NelderMeadOptions nm;
    nm.initial_step = 0.5 * dpol;
    const MinimizeResult refined =
        nelder_mead([&](const std::vector<double>& p) { return -objective(p[0], p[1]); }, {best_pol, best_az}, nm);
    if (-refined.value > best) {
      best = -refined.value;
      best_pol = refined.x[0];
      best_az = refined.x[1];
    }
    out.chi_star = best;
    out.argmax = mid(sphere_point(best_pol, best_az));
    out.method = "restricted";
  } else if (channel.canonical()) {
    const BlochVector axis = to_bloch(frame.from_frame(pauli_z())).r;
    const MinimizeResult line =
        golden_section([&](double s) { return -ev.holevo_star(s * axis); }, -1.0, 1.0, 1e-12);
    out.chi_star = -line.value;
    out.argmax = line.x[0] * axis;
    out.method = "line";
  } else {
    const GridMaximum gm = grid_capacity(ev, options.grid_resolution);
    out.chi_star = gm.value;
    out.argmax = gm.r;
    out.method = "grid";
  }
  out.argmax_state = from_bloch(1.0, out.argmax);
  if (!frame.degenerate) {
    const ComplexMatrix wf = frame.to_frame(out.argmax_state);
    out.plane_residual =
        std::abs(std::conj(frame.z0) * wf(0, 1) * frame.z1 + std::conj(frame.z1) * wf(1, 0) * frame.z0);
  }
  if (options.grid_oracle) {
    const GridMaximum gm = out.method == "grid" ? GridMaximum{out.chi_star, out.argmax}
                                                : grid_capacity(ev, options.grid_resolution);
    out.grid_chi_star = gm.value;
    out.grid_argmax = gm.r;
    out.deviation = std::abs(gm.value - out.chi_star);
  }
  return out;
}

}  // namespace rank2
