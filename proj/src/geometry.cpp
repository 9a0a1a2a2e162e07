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

#include "rank2/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace rank2 {

namespace {

constexpr double kRecheckTol = 1e-8;

const QubitFrame& nondegenerate_frame(const RankTwoChannel& channel, const char* what) {
  const QubitFrame& frame = channel.frame();
  if (frame.degenerate) throw Rank2Error(ErrorKind::kDegenerate, std::string(what) + " needs a non-degenerate map");
  return frame;
}

const QubitCanonicalParams& canonical_params(const RankTwoChannel& channel, const char* what) {
  if (!channel.is_qubit_length_two() || !channel.canonical())
    throw Rank2Error(ErrorKind::kNotCanonical, std::string(what) + " needs canonical Kraus form");
  if (channel.canonical()->degenerate)
    throw Rank2Error(ErrorKind::kDegenerate, std::string(what) + " needs a non-degenerate map");
  return *channel.canonical();
}

Complex phase(Complex z) { return z / std::abs(z); }

// Density operator in reference coordinates from a Bloch vector given in
// frame coordinates.
ComplexMatrix state_from_frame_bloch(const QubitFrame& frame, const BlochVector& rf) {
  return frame.from_frame(from_bloch(1.0, rf));
}

}  // namespace

AntilinearOp theta_in(const RankTwoChannel& channel) {
  const QubitFrame& frame = nondegenerate_frame(channel, "theta_in");
  const ComplexMatrix tf = ComplexMatrix::diagonal(
      CVector{frame.z0 / std::conj(frame.z0), -frame.z1 / std::conj(frame.z1)});
  return AntilinearOp(frame.basis * tf * frame.basis.transpose());
}

AntilinearOp theta_out(const RankTwoChannel& channel) {
  const QubitCanonicalParams& c = canonical_params(channel, "theta_out");
  return AntilinearOp(ComplexMatrix::diagonal(CVector{phase(c.a00 * c.b01), -phase(c.a11 * c.b10)}));
}

ComplexMatrix reflect(const AntilinearOp& theta, const ComplexMatrix& x) {
  return theta.matrix() * x.transpose() * theta.matrix().conj();
}

ComplexMatrix line_direction(const RankTwoChannel& channel) {
  const QubitFrame& frame = nondegenerate_frame(channel, "line_direction");
  const Complex g = frame.z0 * std::conj(frame.z1);
  const ComplexMatrix df{{0.0, g}, {std::conj(g), 0.0}};
  return frame.from_frame(df);
}

ComplexMatrix ConstantConcurrenceLine::point(double t) const { return base + Complex(t) * direction; }

ConstantConcurrenceLine constant_line(const RankTwoChannel& channel, const HermitianOp& x) {
  ConstantConcurrenceLine line;
  line.direction = line_direction(channel);
  line.base = x.matrix();
  line.base_bloch = to_bloch(line.base);
  line.direction_bloch = to_bloch(line.direction).r;
  line.concurrence = concurrence(channel, x).C;

  if (std::abs(line.base_bloch.trace - 1.0) <= kTolPredicate && x.is_psd()) {
    const BlochVector& r = line.base_bloch.r;
    const BlochVector& d = line.direction_bloch;
    const double dd = dot(d, d), rd = dot(r, d), rr = dot(r, r);
    const double disc = std::max(0.0, rd * rd - dd * (rr - 1.0));
    const double s = std::sqrt(disc);
    // Roots of dd t^2 + 2 rd t + (rr - 1), computed without cancellation.
    const double qv = -(rd + std::copysign(s, rd));
    double t1, t2;
    if (qv == 0.0) {
      t1 = t2 = 0.0;
    } else {
      t1 = qv / dd;
      t2 = (rr - 1.0) / qv;
    }
    if (t1 > t2) std::swap(t1, t2);
    line.endpoint_params = std::make_pair(t1, t2);
    line.endpoints = std::make_pair(r + t1 * d, r + t2 * d);
  }
  return line;
}

ComplexMatrix plane_point(const RankTwoChannel& channel, const ComplexMatrix& x, double t1, double t2) {
  const QubitFrame& frame = nondegenerate_frame(channel, "plane_point");
  const CVector p1 = frame.vector_from_frame(CVector{std::conj(frame.z1), std::conj(frame.z0)});
  const CVector p2 = frame.vector_from_frame(CVector{std::conj(frame.z1), -std::conj(frame.z0)});
  return x + Complex(t1) * outer(p1, p1) + Complex(t2) * outer(p2, p2);
}

double max_state_concurrence(const RankTwoChannel& channel) {
  const QubitFrame& frame = channel.frame();
  return 2.0 * std::max(std::norm(frame.z0), std::norm(frame.z1));
}

CylinderSamples cylinder_samples(const RankTwoChannel& channel, double c, const CylinderOptions& options) {
  const QubitFrame& frame = channel.frame();
  if (!(c >= 0.0)) throw Rank2Error(ErrorKind::kOutOfRange, "concurrence level must be non-negative");
  CylinderSamples out;
  out.degenerate = frame.degenerate;
  out.max_concurrence = max_state_concurrence(channel);
  if (c > out.max_concurrence * (1.0 + 1e-12) + 1e-15) {
    std::ostringstream msg;
    msg << std::setprecision(17) << "level " << c << " exceeds the attained maximum " << out.max_concurrence;
    throw Rank2Error(ErrorKind::kOutOfRange, msg.str());
  }
  const std::size_t angles = std::max<std::size_t>(options.angles, 1);
  const std::size_t sweeps = std::max<std::size_t>(options.sweeps, 1);
  const double p = std::norm(frame.z0), q = std::norm(frame.z1);
  auto fraction = [sweeps](std::size_t k) {
    return sweeps == 1 ? 0.5 : static_cast<double>(k) / static_cast<double>(sweeps - 1);
  };
  std::vector<BlochVector> frame_points;

  if (frame.degenerate) {
    // C is |(p - q) + (p + q) rz| with one of p, q zero: a flat sheet.
    double rz = 0.0;
    if (!frame.z0_zero) rz = c / p - 1.0;
    else if (!frame.z1_zero) rz = 1.0 - c / q;
    else if (c > 0.0) throw Rank2Error(ErrorKind::kOutOfRange, "the zero map has concurrence 0 only");
    rz = std::clamp(rz, -1.0, 1.0);
    const double radius = std::sqrt(std::max(0.0, 1.0 - rz * rz));
    frame_points.push_back({0.0, 0.0, rz});
    for (std::size_t k = 1; k <= sweeps; ++k) {
      const double rho = radius * static_cast<double>(k) / static_cast<double>(sweeps);
      for (std::size_t a = 0; a < angles; ++a) {
        const double alpha = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(angles);
        frame_points.push_back({rho * std::cos(alpha), rho * std::sin(alpha), rz});
      }
    }
  } else {
    // C^2 = ((p - q) + (p + q) u)^2 + 4 |g|^2 v^2 with u = rz and v the
    // component along w below; the line direction s is orthogonal to both.
    const Complex g = frame.z0 * std::conj(frame.z1);
    const double gabs = std::abs(g), phi = std::arg(g);
    const BlochVector w{std::sin(phi), std::cos(phi), 0.0};
    const BlochVector s{std::cos(phi), -std::sin(phi), 0.0};
    const BlochVector z{0.0, 0.0, 1.0};
    const std::size_t n_alpha = c == 0.0 ? 1 : angles;
    for (std::size_t a = 0; a < n_alpha; ++a) {
      const double alpha = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(n_alpha);
      const double u = (c * std::cos(alpha) - (p - q)) / (p + q);
      const double v = c * std::sin(alpha) / (2.0 * gabs);
      const double rho2 = u * u + v * v;
      if (rho2 > 1.0) continue;
      const double h = std::sqrt(1.0 - rho2);
      for (std::size_t k = 0; k < sweeps; ++k) {
        const double t = -h + 2.0 * h * fraction(k);
        frame_points.push_back(u * z + v * w + t * s);
      }
    }
  }

  out.points.reserve(frame_points.size());
  for (const BlochVector& rf : frame_points) {
    const ComplexMatrix omega = state_from_frame_bloch(frame, rf);
    const double value = concurrence(channel, HermitianOp(omega)).C;
    if (std::abs(value - c) > kRecheckTol)
      throw std::logic_error("sampled point misses the requested concurrence level");
    out.points.push_back({to_bloch(omega).r, value});
  }
  return out;
}

void write_samples_csv(std::ostream& out, const std::vector<SamplePoint>& points) {
  out << "rx,ry,rz,C\n";
  out << std::setprecision(15);
  // Adding 0.0 turns -0 into 0.
  for (const auto& pt : points)
    out << pt.r.x + 0.0 << ',' << pt.r.y + 0.0 << ',' << pt.r.z + 0.0 << ',' << pt.C + 0.0 << '\n';
}

PrimedVectors psi_primed(const RankTwoChannel& channel, bool flip_first_branch) {
  const QubitCanonicalParams& c = canonical_params(channel, "psi_primed");
  const ComplexMatrix& a = channel.kraus()[0];
  const ComplexMatrix& b = channel.kraus()[1];
  PrimedVectors out;
  out.psi1 = {std::conj(c.z1), std::conj(c.z0)};
  out.psi2 = {std::conj(c.z1), -std::conj(c.z0)};

  Complex s0 = std::sqrt(c.a00 * c.b01);
  const Complex s1 = std::sqrt(c.a11 * c.b10);
  if (flip_first_branch) s0 = -s0;
  // A psi1 = (a00 z1*, a11 z0*) is proportional to (s0, +-s1); pick the sign.
  const CVector a_psi1 = a * out.psi1;
  const Complex ratio = (a_psi1[1] / s1) / (a_psi1[0] / s0);
  const double sign = ratio.real() >= 0.0 ? 1.0 : -1.0;
  out.psi1_out = {s0, sign * s1};
  out.psi2_out = {s0, -sign * s1};

  const std::array<const CVector*, 2> in{&out.psi1, &out.psi2};
  const std::array<const CVector*, 2> outv{&out.psi1_out, &out.psi2_out};
  for (std::size_t k = 0; k < 2; ++k) {
    const double n2 = std::norm((*outv[k])[0]) + std::norm((*outv[k])[1]);
    out.alpha[k] = inner(*outv[k], a * *in[k]) / n2;
    out.beta[k] = inner(*outv[k], b * *in[k]) / n2;
  }
  out.r = ComplexMatrix(2, 2);
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t k = 0; k < 2; ++k)
      out.r(j, k) = out.alpha[j] * std::conj(out.alpha[k]) + out.beta[j] * std::conj(out.beta[k]);
  return out;
}

}  // namespace rank2
