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

#include "rank2/rooforacle.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rank2 {

namespace {

constexpr double kSupportTol = 1e-12;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Output of a rank-two map on |psi><psi| as the vectors K_j psi.
struct OutputGram {
  double y00 = 0.0, y11 = 0.0;
  Complex y01;
  double trace() const { return y00 + y11; }
  double det() const { return std::max(0.0, y00 * y11 - std::norm(y01)); }
};

OutputGram apply_pure(const std::vector<ComplexMatrix>& kraus, std::span<const Complex> psi) {
  OutputGram g;
  for (const auto& k : kraus) {
    Complex v0 = 0.0, v1 = 0.0;
    for (std::size_t c = 0; c < psi.size(); ++c) {
      v0 += k(0, c) * psi[c];
      v1 += k(1, c) * psi[c];
    }
    g.y00 += std::norm(v0);
    g.y11 += std::norm(v1);
    g.y01 += v0 * std::conj(v1);
  }
  return g;
}

// Row-major n x r isometry.
using Isometry = std::vector<Complex>;

void orthonormalize(Isometry& u, std::size_t n, std::size_t r) {
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t pass = 0; pass < 2; ++pass) {
      for (std::size_t l = 0; l < k; ++l) {
        Complex ip = 0.0;
        for (std::size_t j = 0; j < n; ++j) ip += std::conj(u[j * r + l]) * u[j * r + k];
        for (std::size_t j = 0; j < n; ++j) u[j * r + k] -= ip * u[j * r + l];
      }
    }
    double nrm = 0.0;
    for (std::size_t j = 0; j < n; ++j) nrm += std::norm(u[j * r + k]);
    nrm = std::sqrt(nrm);
    for (std::size_t j = 0; j < n; ++j) u[j * r + k] /= nrm;
  }
}

struct Problem {
  const Leaf& leaf;
  std::size_t d = 0;
  std::size_t r = 0;
  std::vector<CVector> w;  // sqrt(lambda_k) e_k
  mutable std::size_t evaluations = 0;

  Ensemble ensemble(const Isometry& u, std::size_t n) const {
    Ensemble e;
    e.vectors.assign(n, CVector(d, 0.0));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < d; ++i) e.vectors[j][i] += u[j * r + k] * w[k][i];
    return e;
  }

  double value(const Isometry& u, std::size_t n) const {
    ++evaluations;
    CVector psi(d);
    double total = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(psi.begin(), psi.end(), Complex(0.0));
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t i = 0; i < d; ++i) psi[i] += u[j * r + k] * w[k][i];
      total += leaf(psi);
    }
    return total;
  }
};

Isometry random_isometry(std::mt19937_64& rng, std::size_t n, std::size_t r) {
  std::normal_distribution<double> gauss;
  Isometry u(n * r);
  for (auto& z : u) z = Complex(gauss(rng), gauss(rng));
  orthonormalize(u, n, r);
  return u;
}

// (1+1) evolution strategy on the isometry manifold with a success-rule step.
double refine(const Problem& prob, Isometry& u, std::size_t n, std::mt19937_64& rng, std::size_t max_iter) {
  std::normal_distribution<double> gauss;
  double best = prob.value(u, n);
  double sigma = 0.2;
  Isometry trial(u.size());
  for (std::size_t it = 0; it < max_iter && sigma > 1e-11; ++it) {
    for (std::size_t i = 0; i < u.size(); ++i) trial[i] = u[i] + sigma * Complex(gauss(rng), gauss(rng));
    orthonormalize(trial, n, prob.r);
    const double v = prob.value(trial, n);
    if (v < best) {
      best = v;
      u.swap(trial);
      sigma *= 1.5;
    } else {
      sigma *= 0.9036;  // 1.5^(-1/4)
    }
  }
  return best;
}

}  // namespace

Leaf concurrence_leaf(const RankTwoChannel& channel) {
  return [kraus = channel.kraus()](std::span<const Complex> psi) {
    return 2.0 * std::sqrt(apply_pure(kraus, psi).det());
  };
}

Leaf entropy_leaf(const RankTwoChannel& channel, EntropyBase base) {
  return [kraus = channel.kraus(), base](std::span<const Complex> psi) {
    const OutputGram g = apply_pure(kraus, psi);
    const double t = g.trace();
    const double s = std::sqrt(std::max(0.0, 0.25 * t * t - g.det()));
    const double lp = 0.5 * t + s;
    const double lm = lp > 0.0 ? g.det() / lp : 0.0;
    return eta(lp, base) + eta(std::max(0.0, lm), base) - eta(t, base);
  };
}

Leaf squared_concurrence_leaf(const RankTwoChannel& channel) {
  return [kraus = channel.kraus()](std::span<const Complex> psi) {
    const double n2 = norm(psi) * norm(psi);
    if (n2 == 0.0) return 0.0;
    return 4.0 * apply_pure(kraus, psi).det() / n2;
  };
}

double decomposition_residual(const Ensemble& ensemble, const ComplexMatrix& x) {
  ComplexMatrix sum = ComplexMatrix::zeros(x.rows(), x.cols());
  for (const auto& v : ensemble.vectors) sum += outer(v, v);
  return max_abs_diff(sum, x);
}

double ensemble_value(const Leaf& leaf, const Ensemble& ensemble) {
  double total = 0.0;
  for (const auto& v : ensemble.vectors) total += leaf(v);
  return total;
}

RoofResult roof_min(const Leaf& leaf, const HermitianOp& x, const RoofOptions& options) {
  const std::vector<double> lam = eig_psd(x);
  const EigenDecomposition ed = hermitian_eigen(x.matrix());
  const std::size_t d = x.dim();
  const double cut = kSupportTol * std::max(lam.front(), 0.0);
  Problem prob{leaf, d, 0, {}};
  for (std::size_t k = 0; k < d; ++k) {
    if (!(ed.values[k] > cut)) break;
    CVector col = ed.vectors.col(k);
    for (auto& z : col) z *= std::sqrt(ed.values[k]);
    prob.w.push_back(std::move(col));
  }
  prob.r = prob.w.size();
  const std::size_t r = prob.r;

  RoofResult out;
  out.rank = r;
  if (r == 0) {
    out.residual = x.matrix().max_abs();
    return out;
  }
  if (r == 1) {
    // Every decomposition of a rank-one X consists of multiples of one
    // vector, so a degree-one homogeneous leaf has a single value.
    out.ensemble.vectors = {prob.w.front()};
    out.value = leaf(prob.w.front());
    out.ladder = {out.value};
    out.residual = decomposition_residual(out.ensemble, x.matrix());
    out.evaluations = 1;
    return out;
  }
  std::size_t n_max = options.n_max != 0 ? options.n_max : (d == 2 ? 4 : d + 2);
  n_max = std::max(n_max, r);

  // Caller-supplied start, mapped to isometry coordinates u_jk = <e_k, psi_j> / sqrt(lambda_k).
  std::optional<Isometry> initial;
  std::size_t initial_n = 0;
  if (options.initial && !options.initial->vectors.empty()) {
    initial_n = options.initial->vectors.size();
    n_max = std::max(n_max, initial_n);
    Isometry u(initial_n * r);
    for (std::size_t j = 0; j < initial_n; ++j)
      for (std::size_t k = 0; k < r; ++k) {
        const double lk = ed.values[k];
        u[j * r + k] = inner(prob.w[k], options.initial->vectors[j]) / lk;
      }
    initial = std::move(u);
  }

  Isometry best_u;
  for (std::size_t n = r; n <= n_max; ++n) {
    Isometry level_u;
    double level = 0.0;
    bool have = false;
    auto consider = [&](Isometry u, std::mt19937_64& rng) {
      const double v = refine(prob, u, n, rng, options.max_iterations);
      if (!have || v < level) {
        level = v;
        level_u = std::move(u);
        have = true;
      }
    };
    if (!best_u.empty()) {
      // Pad the previous optimum with a zero member.
      Isometry padded(n * r, 0.0);
      std::copy(best_u.begin(), best_u.end(), padded.begin());
      std::mt19937_64 rng(splitmix(options.seed ^ splitmix(n * 1000003ULL + 999983ULL)));
      consider(std::move(padded), rng);
    }
    if (initial && n == initial_n) {
      std::mt19937_64 rng(splitmix(options.seed ^ splitmix(n * 1000003ULL + 424242ULL)));
      consider(*initial, rng);
    }
    const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
    for (std::size_t s = 0; s < restarts; ++s) {
      std::mt19937_64 rng(splitmix(options.seed ^ splitmix(n * 1000003ULL + s)));
      consider(random_isometry(rng, n, r), rng);
    }
    out.ladder.push_back(level);
    best_u = std::move(level_u);
  }
  // The last level started from the padded earlier optimum, so it is the best.
  out.value = out.ladder.back();
  out.ensemble = prob.ensemble(best_u, n_max);
  // Drop members that carry no weight; they do not change the sum.
  const double weight_floor = 1e-15 * std::max(x.trace(), 0.0);
  std::erase_if(out.ensemble.vectors, [weight_floor](const CVector& v) { return norm(v) * norm(v) <= weight_floor; });
  out.residual = decomposition_residual(out.ensemble, x.matrix());
  out.evaluations = prob.evaluations;
  return out;
}

FlatnessReport flatness_check(const RankTwoChannel& channel, const HermitianOp& x, double tolerance,
                              const RoofOptions& options) {
  FlatnessReport rep;
  const Leaf cleaf = concurrence_leaf(channel);
  const double weight_cut = 1e-9 * std::max(x.trace(), 0.0);
  auto spread_of = [&](const Ensemble& e) {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const auto& v : e.vectors) {
      const double n2 = norm(v) * norm(v);
      if (n2 <= weight_cut) continue;
      const double c = cleaf(v) / n2;
      lo = first ? c : std::min(lo, c);
      hi = first ? c : std::max(hi, c);
      first = false;
    }
    return hi - lo;
  };
  const RoofResult croof = roof_min(cleaf, x, options);
  rep.c_roof = croof.value;
  rep.concurrence_leaf_spread = spread_of(croof.ensemble);
  const RoofResult qroof = roof_min(squared_concurrence_leaf(channel), x, options);
  rep.squared_roof = qroof.value;
  rep.spread = spread_of(qroof.ensemble);
  rep.gap = std::abs(std::sqrt(std::max(0.0, qroof.value)) - rep.c_roof);
  rep.passed = rep.spread < tolerance && rep.gap < tolerance;
  return rep;
}

}  // namespace rank2
