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


// Acceptance checks: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "iprqs/circuits/comp_basis.hpp"
#include "iprqs/circuits/eigenbasis.hpp"
#include "iprqs/ed/dynamics.hpp"
#include "iprqs/ed/ipr.hpp"
#include "iprqs/ed/spectrum.hpp"
#include "iprqs/hamiltonians/trotter.hpp"
#include "iprqs/harness/experiments.hpp"
#include "oracles.hpp"

namespace {

using namespace iprqs;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail_if(Outcome& o, bool bad, const std::string& what) {
  if (bad) {
    o.pass = false;
    if (!o.detail.empty()) o.detail += "; ";
    o.detail += what;
  }
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double op_norm(const CMatrix& a) { return Eigen::JacobiSVD<CMatrix>(a).singularValues()[0]; }

CMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  CMatrix g(n, n);
  for (Eigen::Index c = 0; c < n; ++c) g.col(c) = oracle::random_vector(static_cast<std::size_t>(n), rng);
  return Eigen::HouseholderQR<CMatrix>(g).householderQ();
}

Outcome estimator_equivalence() {
  Outcome o;
  std::mt19937_64 rng(101);
  double worst = 0.0;
  int cases = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    const QuditState psi = random_state(SiteRegister::uniform(n, 2), rng);
    for (int q = 2; q <= 4; ++q) {
      const double est = run_comp_basis_exact(build_comp_basis_circuit(psi, q)).point_value;
      worst = std::max(worst, std::abs(est - oracle::ipr(psi.amplitudes(), q)));
      ++cases;
    }
  }
  fail_if(o, worst > 1e-10, "deviation above 1e-10");
  o.detail = "max |2P0-1 - sum|c|^2q| = " + fmt("%.2e", worst) + " over " + std::to_string(cases) + " cases" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome closed_forms() {
  Outcome o;
  double worst_basis = 0.0, worst_ghz = 0.0, worst_prod = 0.0, worst_circuit = 0.0;
  for (std::size_t l : {2u, 3u, 4u, 6u}) {
    const SiteRegister reg = SiteRegister::uniform(l, 2);
    std::vector<Digit> digits(l);
    for (std::size_t s = 0; s < l; ++s) digits[s] = static_cast<Digit>((s * 7 + 1) % 2);
    const QuditState basis = basis_state(reg, digits);
    const QuditState ghz = ghz_state(reg);
    for (int q = 2; q <= 4; ++q) {
      worst_basis = std::max(worst_basis, std::abs(ipr_direct(basis.amplitudes(), q).value - 1.0));
      worst_ghz = std::max(worst_ghz, std::abs(ipr_direct(ghz.amplitudes(), q).value - std::pow(2.0, 1 - q)));
      worst_circuit = std::max(
          worst_circuit, std::abs(run_comp_basis_exact(build_comp_basis_circuit(basis, q)).point_value - 1.0));
      worst_circuit = std::max(worst_circuit, std::abs(run_comp_basis_exact(build_comp_basis_circuit(ghz, q)).point_value -
                                                       std::pow(2.0, 1 - q)));
    }
  }
  for (double theta : {0.3, 0.7, 1.1}) {
    for (std::size_t l : {2u, 4u, 6u}) {
      const QuditState p = product_state(l, theta);
      for (int q = 2; q <= 4; ++q) {
        const double want = std::pow(std::pow(std::cos(theta), 2 * q) + std::pow(std::sin(theta), 2 * q), l);
        worst_prod = std::max(worst_prod, std::abs(ipr_direct(p.amplitudes(), q).value - want));
        // The copy circuit is run where q copies of the support stay small.
        if (static_cast<double>(l) * q <= 16) {
          worst_circuit = std::max(
              worst_circuit, std::abs(run_comp_basis_exact(build_comp_basis_circuit(p, q)).point_value - want));
        }
      }
    }
  }
  fail_if(o, worst_basis > 1e-12, "basis state");
  fail_if(o, worst_ghz > 1e-12, "GHZ");
  fail_if(o, worst_prod > 1e-10, "product state");
  fail_if(o, worst_circuit > 1e-10, "circuit estimate");
  o.detail = "basis " + fmt("%.1e", worst_basis) + ", GHZ " + fmt("%.1e", worst_ghz) + ", product " +
             fmt("%.1e", worst_prod) + ", circuit " + fmt("%.1e", worst_circuit) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome oat_curve() {
  Outcome o;
  const ExperimentConfig c = default_config("oat_sweep");
  const auto rows = run_experiment(c);
  double worst = 0.0;
  for (const auto& r : rows) worst = std::max(worst, std::abs(*r.deviation()));
  auto at = [&](double t) {
    return *std::min_element(rows.begin(), rows.end(), [&](const ResultRow& a, const ResultRow& b) {
      return std::abs(a.x - t) < std::abs(b.x - t);
    });
  };
  const ResultRow r0 = at(0.0), r4 = at(kPi / 4);
  fail_if(o, rows.size() < 50, "fewer than 50 grid points");
  fail_if(o, std::abs(r0.estimator - 1.0) > 1e-8 || std::abs(*r0.oracle - 1.0) > 1e-8, "I(0) != 1");
  fail_if(o, std::abs(r4.x - kPi / 4) > 1e-12, "grid misses pi/4");
  fail_if(o, std::abs(r4.estimator - 0.5) > 1e-8 || std::abs(*r4.oracle - 0.5) > 1e-8, "I(pi/4) != 0.5");
  fail_if(o, worst > 1e-8, "curve deviation above 1e-8");
  o.detail = "I(0) = " + fmt("%.12f", r0.estimator) + ", I(pi/4) = " + fmt("%.12f", r4.estimator) +
             ", max dev " + fmt("%.1e", worst) + " over " + std::to_string(rows.size()) + " points" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome appendix_bound() {
  Outcome o;
  ExperimentConfig c = default_config("bound_study");
  c.ensemble = 500;
  c.ensemble_qubits = 4;
  c.m_list = {2, 3, 4, 5, 6};
  c.trotter_steps.clear();
  const auto rows = run_experiment(c);
  std::size_t trials = 0, pxp = 0, bad = 0;
  double tightest = 1.0;
  for (const auto& r : rows) {
    if (!r.error_bound || !r.oracle) continue;
    const double err = r.estimator - *r.oracle;
    if (err < -kBoundSlack || err > *r.error_bound + kBoundSlack) ++bad;
    if (r.variable == "trial") ++trials;
    if (r.label.find("pxp-L6") != std::string::npos) ++pxp;
    if (*r.error_bound > 0) tightest = std::min(tightest, *r.error_bound - err);
  }
  fail_if(o, trials < 500u * 5u, "fewer than 500 random matrices x 5 m values");
  fail_if(o, pxp == 0, "no PXP L=6 rows");
  fail_if(o, bad > 0, std::to_string(bad) + " violations");
  fail_if(o, count_violations(rows) != 0, "study reports violations");
  o.detail = std::to_string(trials) + " random rows, " + std::to_string(pxp) + " PXP L=6 rows, " +
             std::to_string(bad) + " violations, min headroom " + fmt("%.2e", tightest) +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome pxp_run(std::size_t sites, double budget_s, std::string& note) {
  Outcome o;
  ExperimentConfig c = default_config("pxp_sweep");
  c.sites = sites;
  const auto start = std::chrono::steady_clock::now();
  const auto rows = run_experiment(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::size_t bad = 0;
  double h_min = 0.0, ed_min = 2.0, worst_ratio = 0.0;
  for (const auto& r : rows) {
    if (r.m != 5) continue;
    const double allowed = *r.error_bound + *r.trotter_bound;
    const double dev = std::abs(r.estimator - *r.oracle);
    if (dev > allowed) ++bad;
    worst_ratio = std::max(worst_ratio, dev / allowed);
    if (*r.oracle < ed_min) ed_min = *r.oracle, h_min = r.x;
  }
  fail_if(o, bad > 0, std::to_string(bad) + " points outside bound + Trotter allowance");
  fail_if(o, h_min < 0.5 - 1e-12 || h_min > 0.8 + 1e-12, "ED minimum outside [0.5, 0.8]");
  fail_if(o, secs > budget_s, "over time budget");
  note = "L=" + std::to_string(sites) + ": ED min " + fmt("%.4f", ed_min) + " at h=" + fmt("%.2f", h_min) +
         ", max dev/allowance " + fmt("%.3f", worst_ratio) + ", " + fmt("%.0f s", secs);
  return o;
}

Outcome pxp_curve() {
  Outcome o;
  std::string small, full;
  const Outcome a = pxp_run(6, 60.0, small);
  const Outcome b = pxp_run(8, 1800.0, full);
  o.pass = a.pass && b.pass;
  o.detail = small + (a.detail.empty() ? "" : " (" + a.detail + ")") + "; " + full +
             (b.detail.empty() ? "" : " (" + b.detail + ")");
  return o;
}

Outcome aklt_curve() {
  Outcome o;
  ExperimentConfig c = default_config("aklt_sweep");
  c.h_grid.push_back(50.0);
  const auto rows = run_experiment(c);
  double worst = 0.0, at50 = 0.0, prev = -1.0;
  bool monotone = true;
  for (const auto& r : rows) {
    worst = std::max(worst, std::abs(*r.deviation()));
    if (r.x == 50.0) at50 = r.estimator;
    if (r.x >= 1.0 - 1e-12) {
      if (r.estimator < prev - 1e-10) monotone = false;
      prev = r.estimator;
    }
  }
  fail_if(o, worst > 1e-8, "circuit vs ED above 1e-8");
  fail_if(o, at50 < 0.99, "I(h=50) below 0.99");
  fail_if(o, !monotone, "not monotone on [1, 50]");
  o.detail = "max dev " + fmt("%.1e", worst) + ", I(50) = " + fmt("%.6f", at50) + ", monotone on [1,50]: " +
             (monotone ? "yes" : "no") + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome trotter_bound() {
  Outcome o;
  std::size_t bad = 0, checked = 0;
  double worst_ratio = 0.0;
  for (int model = 0; model < 2; ++model) {
    for (double h : {0.0, 0.5, 1.0}) {
      const HamiltonianSpec spec = model == 0 ? build_pxp(4, h) : build_aklt(4, h);
      const CMatrix hm = dense_matrix(spec);
      const double norm = Eigen::SelfAdjointEigenSolver<CMatrix>(hm).eigenvalues().cwiseAbs().maxCoeff();
      const CMatrix exact = oracle::expm_taylor(hm, 1.0);
      double first = 0.0, last = 0.0;
      for (int n = 2; n <= 64; n *= 2) {
        const double err = op_norm(circuit_unitary(trotter_circuit(spec, 1.0, n)) - exact);
        const double bound = norm * norm / (2.0 * n);
        ++checked;
        if (err > bound) ++bad;
        worst_ratio = std::max(worst_ratio, err / bound);
        if (n == 2) first = err;
        last = err;
      }
      if (!(last < first)) fail_if(o, true, spec.label + " h=" + fmt("%.1f", h) + " not converging");
    }
  }
  fail_if(o, bad > 0, std::to_string(bad) + " violations");
  o.detail = std::to_string(checked) + " (model, h, n_T) points, " + std::to_string(bad) +
             " violations, max err/bound " + fmt("%.3f", worst_ratio) + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome degenerate_case() {
  Outcome o;
  std::mt19937_64 rng(808);
  const Eigen::Index dim = 8;
  RVector e(dim);
  e << -1.0, -1.0, -1.0, -0.35, 0.2, 0.55, 0.9, 1.4;
  const CMatrix u = random_unitary(dim, rng);
  const CMatrix h = u * e.cast<Complex>().asDiagonal() * u.adjoint();
  const Spectrum s = eigendecompose(h);
  const double t = default_time(s.spread());
  const double gap = min_gap(s);
  const SiteRegister reg = SiteRegister::uniform(3, 2);
  fail_if(o, s.groups.front().size() != 3, "level is not 3-fold");

  CVector inside = u.leftCols(3) * oracle::random_vector(3, rng);
  const double p_inside = run_eigenbasis_circuit(build_eigenbasis_circuit(QuditState(reg, inside), h, t, 8)).point_value;
  fail_if(o, std::abs(p_inside - 1.0) > 1e-6, "inside-subspace estimate not 1");

  CVector mixed = 0.8 * (u.leftCols(3) * oracle::random_vector(3, rng)) + 0.6 * u.col(5);
  mixed.normalize();
  const double ipr = ipr_degenerate(mixed, s, 2).value;
  double worst = 0.0;
  for (int m = 2; m <= 8; ++m) {
    const IprEstimate est = run_eigenbasis_circuit(build_eigenbasis_circuit(QuditState(reg, mixed), h, t, m), gap);
    const double err = est.point_value - ipr;
    if (err < -kBoundSlack || err > *est.error_bound + kBoundSlack) fail_if(o, true, "m=" + std::to_string(m));
    worst = std::max(worst, std::abs(err));
  }
  o.detail = "inside: |P-1| = " + fmt("%.1e", std::abs(p_inside - 1.0)) + "; mixed: sum p_j^2 = " + fmt("%.6f", ipr) +
             ", max |P-I| " + fmt("%.2e", worst) + " within bound for m=2..8" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome shot_noise() {
  Outcome o;
  const EstimatorCircuit c = build_comp_basis_circuit(product_state(2, 0.5), 2);
  const double exact = run_comp_basis_exact(c).point_value;
  const double p0 = 0.5 + 0.5 * exact;
  std::string parts;
  for (std::uint64_t n : {1000u, 10000u, 100000u}) {
    const int seeds = 200;
    std::vector<double> v;
    for (int s = 0; s < seeds; ++s) v.push_back(run_comp_basis_sampled(c, n, point_seed(2024, s + n)).point_value);
    double mean = 0.0;
    for (double x : v) mean += x / seeds;
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean) / (seeds - 1);
    const double sd = std::sqrt(var);
    const double predicted = 2.0 * std::sqrt(p0 * (1.0 - p0) / static_cast<double>(n));
    const double ratio = sd / predicted;
    const double z = std::abs(mean - exact) / (sd / std::sqrt(double(seeds)));
    fail_if(o, ratio < 0.5 || ratio > 2.0, "std off by more than 2x at n=" + std::to_string(n));
    fail_if(o, z > 5.0, "mean biased at n=" + std::to_string(n));
    parts += (parts.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": sd/pred " +
             fmt("%.3f", ratio) + " z " + fmt("%.2f", z);
  }
  o.detail = parts + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome survival_identity() {
  Outcome o;
  std::string parts;
  auto check = [&](const std::string& name, const CMatrix& h, const CVector& psi) {
    const Spectrum s = eigendecompose(h);
    const double t_max = 1e4 / min_gap(s);
    const auto n = static_cast<std::uint64_t>(std::ceil(4.0 * s.spread() * t_max / kPi));
    const double avg = survival_average_numeric(psi, s, t_max, n);
    const double ipr = ipr_degenerate(psi, s, 2).value;
    fail_if(o, std::abs(avg - ipr) > 1e-2, name + " off by more than 1e-2");
    parts += (parts.empty() ? "" : ", ") + name + ": |avg - I| = " + fmt("%.1e", std::abs(avg - ipr)) + " (" +
             std::to_string(n) + " samples)";
  };
  check("PXP L=6 h=0.3", dense_matrix(build_pxp(6, 0.3)), neel_state(6).amplitudes());
  std::mt19937_64 rng(909);
  check("AKLT L=3 h=1", dense_matrix(build_aklt(3, 1.0)), oracle::random_vector(27, rng));
  check("AKLT L=3 h=0", dense_matrix(build_aklt(3, 0.0)), oracle::random_vector(27, rng));
  o.detail = parts + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "estimator-oracle equivalence", 10, estimator_equivalence},
      {2, "closed-form IPRs", 5, closed_forms},
      {3, "OAT curve", 30, oat_curve},
      {4, "eigenbasis error bound", 300, appendix_bound},
      {5, "PXP field sweep", 1860, pxp_curve},
      {6, "AKLT field sweep", 120, aklt_curve},
      {7, "Trotter error bound", 120, trotter_bound},
      {8, "degenerate spectrum", 30, degenerate_case},
      {9, "shot noise", 120, shot_noise},
      {10, "survival-probability identity", 120, survival_identity},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.pass = false;
      o.detail += "; over budget";
    }
    if (!o.pass) ++failed;
    std::printf("%s %2d %s: %s [%.1f s, budget %.0f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                secs, c.budget_s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed;
}
