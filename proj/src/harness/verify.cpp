// Copyright 2026 The iprqs Authors
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

#include "iprqs/harness/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "iprqs/circuits/comp_basis.hpp"
#include "iprqs/circuits/eigenbasis.hpp"
#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"
#include "iprqs/core/linalg.hpp"
#include "iprqs/ed/dynamics.hpp"
#include "iprqs/ed/ipr.hpp"
#include "iprqs/harness/experiments.hpp"
#include "iprqs/harness/output.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"

namespace iprqs {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checked;
    if (!ok) {
      if (result_.violations == 0) result_.detail = what;
      ++result_.violations;
    }
  }

  PropertyResult done() { return std::move(result_); }

 private:
  PropertyResult result_;
};

PropertyResult estimator_equivalence(std::uint64_t seed) {
  Suite s("comp-basis estimator equals direct IPR");
  std::mt19937_64 rng(seed);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const QuditState psi = random_state(SiteRegister::uniform(n, 2), rng);
      for (int q = 2; q <= 4; ++q) {
        const double est = run_comp_basis_exact(build_comp_basis_circuit(psi, q)).point_value;
        const double ref = ipr_direct(psi.amplitudes(), q).value;
        s.check(std::abs(est - ref) <= 1e-10, "n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                                  " deviation " + format_number(est - ref));
      }
    }
  }
  const QuditState qutrits = random_state(SiteRegister::uniform(2, 3), rng);
  for (int q = 2; q <= 3; ++q) {
    const double est = run_comp_basis_exact(build_comp_basis_circuit(qutrits, q)).point_value;
    s.check(std::abs(est - ipr_direct(qutrits.amplitudes(), q).value) <= 1e-10, "qutrit q=" + std::to_string(q));
  }
  return s.done();
}

PropertyResult closed_forms() {
  Suite s("closed-form IPRs");
  for (std::size_t L = 2; L <= 6; L += 2) {
    const SiteRegister reg = SiteRegister::uniform(L, 2);
    for (int q = 2; q <= 4; ++q) {
      s.check(std::abs(ipr_direct(ghz_state(reg).amplitudes(), q).value - std::pow(2.0, 1 - q)) <= 1e-12, "GHZ");
      std::vector<Digit> digits(L, 1);
      s.check(std::abs(ipr_direct(basis_state(reg, digits).amplitudes(), q).value - 1.0) <= 1e-12, "basis");
      for (double theta : {0.3, 0.7, 1.1}) {
        const double ref = std::pow(std::pow(std::cos(theta), 2 * q) + std::pow(std::sin(theta), 2 * q), L);
        s.check(std::abs(ipr_direct(product_state(L, theta).amplitudes(), q).value - ref) <= 1e-10, "product");
      }
    }
  }
  return s.done();
}

PropertyResult ipr_order_and_range(std::uint64_t seed) {
  Suite s("IPR range and monotonicity in q");
  std::mt19937_64 rng(seed + 1);
  for (int trial = 0; trial < 50; ++trial) {
    const QuditState psi = random_state(SiteRegister::uniform(3, 2), rng);
    double prev = 2.0;
    for (int q = 2; q <= 6; ++q) {
      const double v = ipr_direct(psi.amplitudes(), q).value;
      s.check(v <= prev + 1e-15, "I_q increased with q");
      s.check(v >= std::pow(8.0, 1 - q) - 1e-12 && v <= 1.0 + 1e-12, "IPR out of range");
      prev = v;
    }
  }
  return s.done();
}

PropertyResult cycle_identity(std::uint64_t seed) {
  Suite s("q-fold controlled cycle gives P0 = 1");
  std::mt19937_64 rng(seed + 2);
  for (int q = 2; q <= 4; ++q) {
    const QuditState psi = random_state(SiteRegister::uniform(2, 2), rng);
    EstimatorCircuit c = build_comp_basis_circuit(psi, q);
    std::vector<CircuitStep> steps;
    for (const auto& step : c.plan.steps) {
      const auto* g = std::get_if<GateOp>(&step);
      const int copies = g != nullptr && g->name.rfind("C-Pi", 0) == 0 ? q : 1;
      for (int k = 0; k < copies; ++k) steps.push_back(step);
    }
    c.plan.steps = std::move(steps);
    s.check(std::abs(readout_probability(c) - 1.0) <= 1e-12, "q=" + std::to_string(q));
  }
  return s.done();
}

PropertyResult hamiltonian_structure() {
  Suite s("Hamiltonians Hermitian; PXP translation invariant");
  std::vector<HamiltonianSpec> specs{build_oat(4), build_pxp(6, 0.4, true), build_pxp(5, 0.7, false),
                                     build_aklt(3, 0.0), build_aklt(4, 2.0)};
  for (const auto& spec : specs) {
    const CMatrix h = dense_matrix(spec);
    s.check(hermiticity_defect(h) <= 1e-12, spec.label + " not Hermitian");
  }
  for (std::size_t L : {4u, 6u}) {
    const CMatrix h = dense_matrix(build_pxp(L, 0.3, true));
    const SiteRegister reg = SiteRegister::uniform(L, 2);
    CMatrix shift = CMatrix::Zero(h.rows(), h.cols());
    for (Index i = 0; i < reg.total_dim(); ++i) {
      std::vector<Digit> d = reg.digits_of(i);
      std::rotate(d.begin(), d.begin() + 1, d.end());
      shift(static_cast<Eigen::Index>(reg.index_of(d)), static_cast<Eigen::Index>(i)) = 1.0;
    }
    s.check((shift * h - h * shift).cwiseAbs().maxCoeff() <= 1e-12, "PXP L=" + std::to_string(L));
  }
  return s.done();
}

PropertyResult degenerate_safety() {
  Suite s("degenerate spectra converge to sum_j p_j^2");
  RVector diag(8);
  diag << 0.0, 0.0, 0.0, 0.7, 1.3, 1.3, 1.9, 2.4;
  const CMatrix h = diag.cast<Complex>().asDiagonal();
  const SiteRegister reg = SiteRegister::uniform(3, 2);
  CVector inside = CVector::Zero(8);
  inside << 0.6, Complex(0.0, 0.48), 0.64, 0, 0, 0, 0, 0;
  CVector mixed = CVector::Zero(8);
  mixed << 0.5, 0.5, 0, 0, 0.5, Complex(0.0, 0.5), 0, 0;
  const Spectrum spec = eigendecompose(h);
  const double t = default_time(spec.spread());
  for (const CVector& v : {inside, mixed}) {
    const QuditState psi(reg, v.normalized());
    const double oracle = ipr_degenerate(psi.amplitudes(), spec, 2).value;
    for (int m : {2, 4, 6}) {
      const double p = run_eigenbasis_circuit(build_eigenbasis_circuit(psi, h, t, m)).point_value;
      const double bound = appendix_a_bound(m, min_gap(spec), t);
      s.check(p - oracle >= -kBoundSlack && p - oracle <= bound + kBoundSlack, "m=" + std::to_string(m));
    }
  }
  return s.done();
}

PropertyResult survival_identity() {
  Suite s("long-time survival average equals eigenbasis IPR");
  const HamiltonianSpec spec = build_pxp(4, 0.3, true);
  const Spectrum sp = eigendecompose(dense_matrix(spec));
  const QuditState psi = neel_state(4);
  const double t_max = 1e4 / min_gap(sp);
  const auto n = static_cast<std::uint64_t>(std::ceil(4.0 * sp.spread() * t_max / kPi));
  const double avg = survival_average_numeric(psi.amplitudes(), sp, t_max, n);
  s.check(std::abs(avg - ipr_degenerate(psi.amplitudes(), sp, 2).value) <= 1e-2, "PXP L=4");
  return s.done();
}

PropertyResult sampled_unbiased(std::uint64_t seed) {
  Suite s("sampled estimator mean within 5 standard errors");
  std::mt19937_64 rng(seed + 3);
  const QuditState psi = random_state(SiteRegister::uniform(2, 2), rng);
  const EstimatorCircuit c = build_comp_basis_circuit(psi, 2);
  const double exact = run_comp_basis_exact(c).point_value;
  const double p0 = 0.5 * (1.0 + exact);
  constexpr int kSeeds = 200;
  constexpr std::uint64_t kShots = 1000;
  double sum = 0.0;
  for (int k = 0; k < kSeeds; ++k) sum += run_comp_basis_sampled(c, kShots, point_seed(seed, k)).point_value;
  const double mean = sum / kSeeds;
  const double se = 2.0 * std::sqrt(p0 * (1.0 - p0) / static_cast<double>(kShots * kSeeds));
  s.check(std::abs(mean - exact) <= 5.0 * se, "mean " + format_number(mean) + " vs " + format_number(exact));
  return s.done();
}

PropertyResult global_phase_invariance(std::uint64_t seed) {
  Suite s("adding c * identity leaves the eigenbasis IPR unchanged");
  std::mt19937_64 rng(seed + 4);
  const CMatrix h = random_hermitian(8, rng);
  const QuditState psi = random_state(SiteRegister::uniform(3, 2), rng);
  const double a = ipr_in_eigenbasis(psi.amplitudes(), eigendecompose(h), 2).value;
  const double b = ipr_in_eigenbasis(psi.amplitudes(), eigendecompose(h + 3.7 * CMatrix::Identity(8, 8)), 2).value;
  s.check(std::abs(a - b) <= 1e-10, "shifted spectrum");
  return s.done();
}

}  // namespace

std::vector<PropertyResult> run_property_suites(std::uint64_t seed) {
  return {estimator_equivalence(seed), closed_forms(),       ipr_order_and_range(seed),
          cycle_identity(seed),        hamiltonian_structure(), degenerate_safety(),
          survival_identity(),         sampled_unbiased(seed), global_phase_invariance(seed)};
}

}  // namespace iprqs
