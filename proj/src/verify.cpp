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

#include "rank2/verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "rank2/channel.hpp"
#include "rank2/concurrence.hpp"
#include "rank2/entanglement.hpp"
#include "rank2/geometry.hpp"
#include "rank2/rooforacle.hpp"
#include "rank2/sampling.hpp"

namespace rank2 {

using nlohmann::json;

namespace {

std::size_t count(const VerifyOptions& o, std::size_t n) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(o.size_factor * static_cast<double>(n))));
}

// Runs body, stamps the name and the elapsed time, and sets passed from the
// metric unless the body already decided. An exception fails the check and
// is recorded under details.error.
CheckResult timed(const std::string& name, double tolerance, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  r.tolerance = tolerance;
  r.passed = true;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.details["error"] = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!(r.metric <= tolerance)) r.passed = false;
  return r;
}

RankTwoChannel nondegenerate_qubit_channel(Rng& rng, bool trace_preserving) {
  for (;;) {
    RankTwoChannel ch = random_channel(rng, 2, 2, trace_preserving);
    if (!ch.frame().degenerate) return ch;
  }
}

CVector bell_state() {
  const double s = 1.0 / std::sqrt(2.0);
  return {s, 0.0, 0.0, s};
}

RoofOptions roof_options(std::uint64_t seed, std::size_t restarts = 32, std::size_t n_max = 4) {
  RoofOptions o;
  o.seed = seed;
  o.restarts = restarts;
  o.n_max = n_max;
  return o;
}

}  // namespace

double wootters_concurrence(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw Rank2Error(ErrorKind::kDimensionMismatch, "Wootters needs 4 x 4");
  Eigen::Matrix4cd r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = rho(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  r = 0.5 * (r + r.adjoint()).eval();
  Eigen::Matrix2cd sy;
  sy << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  Eigen::Matrix4cd yy;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) yy(2 * a + c, 2 * b + d) = sy(a, b) * sy(c, d);
  // rho (yy conj(rho) yy) = S S^dagger with S = sqrt(rho) yy conj(sqrt(rho)), so
  // the lambdas are the singular values of S and need no square roots of
  // noise-level eigenvalues.
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(r);
  const Eigen::Vector4d root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() * root.asDiagonal() * es.eigenvectors().adjoint();
  const Eigen::Matrix4cd s = sqrt_rho * yy * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(s);
  const Eigen::Vector4d l = svd.singularValues();  // descending
  return std::max(0.0, l(0) - l(1) - l(2) - l(3));
}

CheckResult check_determinant_identity(const VerifyOptions& options) {
  return timed("determinant_identity", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 1);
    const std::size_t n = count(options, 200);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = 2 + i % 3, d = 2 + (i / 3) % 3;
      const RankTwoChannel ch = random_channel(rng, m, d, false);
      const CVector p1 = random_unit_vector(rng, d), p2 = random_unit_vector(rng, d);
      const Complex direct = ch.apply(outer(p2, p1)).determinant();
      r.metric = std::max(r.metric, std::abs(ch.det_pure(p1, p2) - direct));
    }
    r.instances = n;
  });
}

CheckResult check_closed_form_vs_roof(const VerifyOptions& options) {
  return timed("closed_form_vs_roof", 1e-5, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 2);
    const std::size_t n = count(options, 100);
    double worst_route = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = nondegenerate_qubit_channel(rng, true);
      const HermitianOp x(random_density(rng, 2, 2));
      const ConcurrenceReport c = concurrence(ch, x);
      const RoofResult roof = roof_min(concurrence_leaf(ch), x, roof_options(options.seed + i));
      r.metric = std::max(r.metric, std::abs(c.C - roof.value));
      worst_route = std::max(worst_route, c.route_discrepancy);
    }
    r.instances = n;
    r.details["max_route_discrepancy"] = worst_route;
  });
}

CheckResult check_wootters_agreement(const VerifyOptions& options) {
  return timed("wootters_agreement", 1e-8, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 3);
    const RankTwoChannel ptr = RankTwoChannel::phase_damping(0.5);
    const std::size_t n = count(options, 100);
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexMatrix x = random_density(rng, 4, 1 + i % 4);
      r.metric = std::max(r.metric, std::abs(concurrence(ptr, HermitianOp(x)).C - wootters_concurrence(x)));
    }
    const CVector bell = bell_state();
    const double c_bell = concurrence(ptr, HermitianOp(outer(bell, bell))).C;
    const double c_mixed = concurrence(ptr, HermitianOp(Complex(0.25) * ComplexMatrix::identity(4))).C;
    r.metric = std::max({r.metric, std::abs(c_bell - 1.0), std::abs(c_mixed)});
    r.instances = n + 2;
    r.details["bell"] = c_bell;
    r.details["maximally_mixed"] = c_mixed;
  });
}

CheckResult check_flatness(const VerifyOptions& options) {
  return timed("flatness", 1e-4, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 4);
    const std::size_t n = count(options, 50);
    double worst_gap = 0.0;
    std::size_t degenerate = 0;
    for (std::size_t i = 0; i < n; ++i) {
      // Every fifth instance is an amplitude-damping map, which is degenerate.
      const bool degenerate_case = i % 5 == 4;
      const double g = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
      const RankTwoChannel ch = degenerate_case
                                    ? RankTwoChannel::canonical_qubit(1.0, std::sqrt(1.0 - g), std::sqrt(g), 0.0)
                                    : nondegenerate_qubit_channel(rng, true);
      if (degenerate_case) ++degenerate;
      const HermitianOp x(random_density(rng, 2, 2));
      const FlatnessReport f = flatness_check(ch, x, 1e-4, roof_options(options.seed + i));
      r.metric = std::max({r.metric, f.spread, f.gap});
      worst_gap = std::max(worst_gap, f.gap);
      if (!f.passed) r.passed = false;
    }
    r.instances = n;
    r.details["degenerate_instances"] = degenerate;
    r.details["max_gap"] = worst_gap;
  });
}

CheckResult check_entanglement_closed_form(const VerifyOptions& options) {
  return timed("entanglement_closed_form", 1e-4, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 5);
    const std::size_t n = count(options, 50);
    const RankTwoChannel ptr = RankTwoChannel::phase_damping(0.5);
    for (std::size_t i = 0; i < n; ++i) {
      const bool two_qubit = i % 5 == 4;
      const RankTwoChannel ch = two_qubit ? ptr : random_channel(rng, 2, 2, true);
      const HermitianOp x(two_qubit ? random_density(rng, 4, 2) : random_density(rng, 2, 2));
      const double e = entanglement(ch, x).E;
      const RoofResult roof =
          roof_min(entropy_leaf(ch), x, roof_options(options.seed + i, 32, 0));
      r.metric = std::max(r.metric, std::abs(e - roof.value));
    }
    // States with unit output trace and C = 1 carry exactly one bit.
    const CVector bell = bell_state();
    const EntanglementReport eb = entanglement(ptr, HermitianOp(outer(bell, bell)));
    const RankTwoChannel amp = RankTwoChannel::canonical_qubit(1.0, std::sqrt(0.5), std::sqrt(0.5), 0.0);
    const EntanglementReport ea = entanglement(amp, HermitianOp(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}));
    const double unit_err = std::max({std::abs(eb.E - 1.0), std::abs(eb.C - 1.0), std::abs(ea.E - 1.0),
                                      std::abs(ea.C - 1.0)});
    r.details["unit_concurrence_error"] = unit_err;
    if (unit_err > 1e-10) r.passed = false;
    r.instances = n + 2;
  });
}

CheckResult check_conjugation_identities(const VerifyOptions& options) {
  return timed("conjugation_identities", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 6);
    const std::size_t n = count(options, 100);
    double lemma = 0.0, covariance = 0.0, invariance = 0.0, polar = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = random_canonical(rng, false);
      const QubitCanonicalParams& p = *ch.canonical();
      const AntilinearOp th = theta_in(ch), tp = theta_out(ch);
      const ComplexMatrix& a = ch.kraus()[0];
      const ComplexMatrix& b = ch.kraus()[1];
      const Complex fa = p.b01 * p.b10 / std::abs(p.b01 * p.b10);
      const Complex fb = -p.a00 * p.a11 / std::abs(p.a00 * p.a11);
      lemma = std::max(lemma, max_abs_diff(compose(compose(tp, a), th), fa * a));
      lemma = std::max(lemma, max_abs_diff(compose(compose(tp, b), th), fb * b));
      const ComplexMatrix x = random_hermitian(rng, 2);
      covariance =
          std::max(covariance, max_abs_diff(conj_sandwich(tp, ch.apply(conj_sandwich(th, x))), ch.apply(x)));

      const RankTwoChannel general = nondegenerate_qubit_channel(rng, false);
      for (const RankTwoChannel* c : {&ch, &general}) {
        const AntilinearOp t = theta_in(*c);
        const ComplexMatrix y = random_hermitian(rng, 2);
        invariance = std::max(invariance, std::abs(closed_form_c(c->frame(), reflect(t, y)) -
                                                   closed_form_c(c->frame(), y)));
        polar = std::max(polar, max_abs_diff(polar_conjugation(c->vartheta()).theta.matrix(), t.matrix()));
      }
    }
    r.metric = std::max({lemma, covariance, invariance, polar});
    r.instances = n;
    r.details["kraus_conjugation"] = lemma;
    r.details["channel_covariance"] = covariance;
    r.details["c_reflection_invariance"] = invariance;
    r.details["polar_conjugation"] = polar;
  });
}

CheckResult check_holevo_restriction(const VerifyOptions& options) {
  return timed("holevo_restriction", 1e-6, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 7);
    const std::size_t n = count(options, 20);
    double plane = 0.0;
    json disagreements = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = nondegenerate_qubit_channel(rng, true);
      CapacityOptions co;
      co.grid_oracle = true;
      const CapacityResult cap = holevo_capacity(ch, co);
      r.metric = std::max(r.metric, *cap.deviation);
      plane = std::max(plane, cap.plane_residual.value_or(0.0));
      if (*cap.deviation > 1e-8)
        disagreements.push_back({{"instance", i}, {"restricted", cap.chi_star}, {"grid", *cap.grid_chi_star}});
    }
    r.instances = n;
    r.details["max_plane_residual"] = plane;
    r.details["disagreements_above_1e-8"] = disagreements;
    if (plane > 1e-8) r.passed = false;
  });
}

CheckResult check_lower_bounds(const VerifyOptions& options) {
  return timed("lower_bound_estimates", 1e-6, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 8);
    const std::size_t n = count(options, 50);
    double rank_one = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = random_channel(rng, 3, 2, false);
      const HermitianOp x(random_density(rng, 2, 2));
      const LowerBound lb = lower_bound(ch, x);
      const double oracle = roof_min(concurrence_leaf(ch), x, roof_options(options.seed + i)).value;
      r.metric = std::max({r.metric, lb.pairwise - oracle, lb.qubit_estimate.value_or(0.0) - oracle});

      const CVector psi = random_unit_vector(rng, 2);
      const HermitianOp pure(outer(psi, psi));
      const LowerBound lp = lower_bound(ch, pure);
      const double exact = pure_concurrence(ch, psi);
      rank_one = std::max({rank_one, std::abs(lp.pairwise - exact), std::abs(*lp.qubit_estimate - exact)});
    }
    r.instances = n;
    r.details["rank_one_equality_error"] = rank_one;
    if (rank_one > 1e-10) r.passed = false;
  });
}

CheckResult check_constant_lines(const VerifyOptions& options) {
  return timed("constant_lines", 1e-9, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 9);
    const std::size_t n = count(options, 50);
    double endpoint = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = nondegenerate_qubit_channel(rng, i % 2 == 0);
      const HermitianOp x(random_density(rng, 2, 2));
      const ConstantConcurrenceLine line = constant_line(ch, x);
      const auto [t1, t2] = *line.endpoint_params;
      double lo = line.concurrence, hi = line.concurrence;
      for (int k = 0; k <= 20; ++k) {
        const double t = t1 + (t2 - t1) * k / 20.0;
        const double c = concurrence(ch, HermitianOp(line.point(t))).C;
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      r.metric = std::max(r.metric, hi - lo);
      const ComplexMatrix p1 = from_bloch(1.0, line.endpoints->first);
      const ComplexMatrix p2 = from_bloch(1.0, line.endpoints->second);
      endpoint = std::max(endpoint, std::abs(ch.apply(p1).determinant() - ch.apply(p2).determinant()));
    }
    r.instances = n;
    r.details["endpoint_determinant_error"] = endpoint;
    if (endpoint > 1e-10) r.passed = false;
  });
}

CheckResult check_phase_damping_scaling(const VerifyOptions& options) {
  return timed("phase_damping_scaling", 1e-8, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 10);
    const RankTwoChannel half = RankTwoChannel::phase_damping(0.5);
    const std::size_t per_q = count(options, 10);
    double oracle_err_derived = 0.0, oracle_err_stated = 0.0;
    for (int qi = 1; qi <= 9; ++qi) {
      const double q = 0.1 * qi;
      const RankTwoChannel ch = RankTwoChannel::phase_damping(q);
      const double expected = 2.0 * std::sqrt(q * (1.0 - q));
      for (std::size_t i = 0; i < per_q; ++i) {
        ComplexMatrix x;
        double c_half = 0.0;
        do {
          x = random_density(rng, 4, 1 + i % 4);
          c_half = concurrence(half, HermitianOp(x)).C;
        } while (c_half < 0.05);
        const double ratio = concurrence(ch, HermitianOp(x)).C / c_half;
        r.metric = std::max(r.metric, std::abs(ratio - expected));
        if (i == 0) {
          // The roof oracle settles which constant is right.
          const RoofResult roof = roof_min(concurrence_leaf(ch), HermitianOp(x),
                                           roof_options(options.seed + static_cast<std::uint64_t>(qi), 8, 4));
          const double w = wootters_concurrence(x);
          if (w > 0.0) {
            const double oracle_ratio = roof.value / w;
            oracle_err_derived = std::max(oracle_err_derived, std::abs(oracle_ratio - expected));
            oracle_err_stated = std::max(oracle_err_stated, std::abs(oracle_ratio - 2.0 * expected));
          }
        }
      }
    }
    r.instances = 9 * per_q;
    r.details["oracle_error_vs_2sqrt"] = oracle_err_derived;
    r.details["oracle_error_vs_4sqrt"] = oracle_err_stated;
    const bool resolved = oracle_err_derived < 1e-4 && oracle_err_stated > 1e-2;
    r.details["resolved_by_oracle"] = resolved ? "2*sqrt(q(1-q))" : "unresolved";
    if (!resolved) r.passed = false;
  });
}

CheckResult check_derivative_identity(const VerifyOptions& options) {
  return timed("derivative_identity", 1e-9, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 11);
    const std::size_t n = count(options, 60);
    double copositive = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = 2 + i % 3, d = 2 + (i / 3) % 3;
      const RankTwoChannel ch = random_channel(rng, m, d, false);
      const CVector p1 = random_unit_vector(rng, d), p2 = random_unit_vector(rng, d);
      const Complex direct = ch.apply(outer(p2, p1)).determinant();
      const CVector rhs = ch.derivative(outer(p1, p2)) * p2;
      r.metric = std::max(r.metric, std::abs(inner(p1, rhs) - direct));
      if (d == 2) {
        const HermitianOp dx(ch.derivative(random_density(rng, 2, 2)));
        copositive = std::max(copositive, -dx.eigenvalues().back());
      }
    }
    r.instances = n;
    r.details["qubit_copositivity_violation"] = std::max(0.0, copositive);
    if (copositive > 1e-12) r.passed = false;
  });
}

CheckResult check_separable_vectors(const VerifyOptions& options) {
  return timed("separable_vectors", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 12);
    const std::size_t n = count(options, 50);
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = nondegenerate_qubit_channel(rng, false);
      const auto [f1, f2] = separable_vectors(ch);
      const auto [q1, q2] = separable_roots(ch.vartheta());
      for (const CVector* v : {&f1, &f2}) r.metric = std::max(r.metric, std::abs(ch.apply(outer(*v, *v)).determinant()));
      // The two routes agree up to order and phase.
      const double same = std::min(std::abs(1.0 - std::abs(inner(f1, q1))) + std::abs(1.0 - std::abs(inner(f2, q2))),
                                   std::abs(1.0 - std::abs(inner(f1, q2))) + std::abs(1.0 - std::abs(inner(f2, q1))));
      r.metric = std::max(r.metric, same);
      const CVector swapped = theta_in(ch).apply(f1);
      r.metric = std::max(r.metric, std::abs(1.0 - std::abs(inner(swapped, f2))));
    }
    r.instances = n;
  });
}

CheckResult check_kraus_remixing(const VerifyOptions& options) {
  return timed("kraus_remixing", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 13);
    const std::size_t n = count(options, 30);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t m = 2 + i % 3, d = 2 + (i / 3) % 3;
      const RankTwoChannel ch = random_channel(rng, m, d, false);
      const ComplexMatrix u = random_unitary(rng, m);
      std::vector<ComplexMatrix> mixed;
      for (std::size_t j = 0; j < m; ++j) {
        ComplexMatrix k = ComplexMatrix::zeros(2, d);
        for (std::size_t l = 0; l < m; ++l) k += u(j, l) * ch.kraus()[l];
        mixed.push_back(std::move(k));
      }
      const RankTwoChannel other(std::move(mixed));
      const ComplexMatrix x = random_hermitian(rng, d);
      r.metric = std::max({r.metric, max_abs_diff(ch.apply(x), other.apply(x)),
                           max_abs_diff(ch.derivative(x), other.derivative(x))});
    }
    r.instances = n;
  });
}

CheckResult check_primed_vectors(const VerifyOptions& options) {
  return timed("primed_vectors", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 14);
    const std::size_t n = count(options, 50);
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = random_canonical(rng, i % 2 == 0);
      const PrimedVectors pv = psi_primed(ch);
      const std::array<const CVector*, 2> in{&pv.psi1, &pv.psi2};
      const std::array<const CVector*, 2> out{&pv.psi1_out, &pv.psi2_out};
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k)
          r.metric = std::max(r.metric, max_abs_diff(ch.apply(outer(*in[j], *in[k])),
                                                     pv.r(j, k) * outer(*out[j], *out[k])));
      const AntilinearOp tp = theta_out(ch);
      const CVector t1 = tp.apply(pv.psi1_out);
      for (std::size_t c = 0; c < 2; ++c) r.metric = std::max(r.metric, std::abs(t1[c] - pv.psi2_out[c]));
      const PrimedVectors flipped = psi_primed(ch, true);
      for (std::size_t j = 0; j < 2; ++j)
        r.metric = std::max(r.metric, max_abs_diff(pv.r(j, j) * outer(*out[j], *out[j]),
                                                   flipped.r(j, j) * outer(j == 0 ? flipped.psi1_out : flipped.psi2_out,
                                                                           j == 0 ? flipped.psi1_out : flipped.psi2_out)));
    }
    r.instances = n;
  });
}

CheckResult check_holevo_symmetry(const VerifyOptions& options) {
  return timed("holevo_symmetry", 1e-10, [&](CheckResult& r) {
    Rng rng = make_rng(options.seed, 15);
    const std::size_t n = count(options, 50);
    double concavity = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const RankTwoChannel ch = nondegenerate_qubit_channel(rng, true);
      const AntilinearOp th = theta_in(ch);
      const ComplexMatrix x = random_density(rng, 2, 2);
      const double a = holevo_star(ch, HermitianOp(x));
      const double b = holevo_star(ch, HermitianOp(conj_sandwich(th, x)));
      r.metric = std::max(r.metric, std::abs(a - b));
      const ComplexMatrix y = random_density(rng, 2, 2);
      const double mid = holevo_star(ch, HermitianOp(Complex(0.5) * (x + y)));
      concavity = std::max(concavity, 0.5 * (a + holevo_star(ch, HermitianOp(y))) - mid);
    }
    r.instances = n;
    r.details["concavity_violation"] = std::max(0.0, concavity);
    if (concavity > 1e-12) r.passed = false;
  });
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  return {check_determinant_identity(options),   check_closed_form_vs_roof(options),
          check_wootters_agreement(options),     check_flatness(options),
          check_entanglement_closed_form(options), check_conjugation_identities(options),
          check_holevo_restriction(options),     check_lower_bounds(options),
          check_constant_lines(options),         check_phase_damping_scaling(options)};
}

std::vector<CheckResult> run_battery(const VerifyOptions& options) {
  std::vector<CheckResult> all = run_acceptance(options);
  for (auto* f : {check_derivative_identity, check_separable_vectors, check_kraus_remixing, check_primed_vectors,
                  check_holevo_symmetry})
    all.push_back(f(options));
  return all;
}

json summary_json(const std::vector<CheckResult>& results, const VerifyOptions& options, bool include_timings) {
  json out;
  out["seed"] = options.seed;
  out["size_factor"] = options.size_factor;
  bool all = true;
  json checks = json::array();
  json failed = json::array();
  for (const auto& r : results) {
    json c = {{"name", r.name},           {"passed", r.passed},      {"metric", r.metric},
              {"tolerance", r.tolerance}, {"instances", r.instances}, {"details", r.details}};
    if (include_timings) c["seconds"] = r.seconds;
    checks.push_back(std::move(c));
    if (!r.passed) failed.push_back(r.name);
    all = all && r.passed;
  }
  out["passed"] = all;
  out["failed"] = failed;
  out["checks"] = checks;
  return out;
}

}  // namespace rank2
