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

#include "iprqs/harness/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <string>

#include "iprqs/circuits/comp_basis.hpp"
#include "iprqs/circuits/eigenbasis.hpp"
#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"
#include "iprqs/core/linalg.hpp"
#include "iprqs/ed/dynamics.hpp"
#include "iprqs/ed/ipr.hpp"
#include "iprqs/ed/spectrum.hpp"
#include "iprqs/harness/output.hpp"
#include "iprqs/harness/pool.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"
#include "iprqs/hamiltonians/trotter.hpp"

namespace iprqs {

QuditState neel_state(std::size_t sites) {
  std::vector<Digit> digits(sites);
  for (std::size_t i = 0; i < sites; ++i) digits[i] = static_cast<Digit>(i % 2);
  return basis_state(SiteRegister::uniform(sites, 2), digits);
}

std::uint64_t point_seed(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

IprEstimate run_copy_circuit(const ExperimentConfig& c, const EstimatorCircuit& circuit, std::size_t index) {
  if (c.mode == Mode::sampled) {
    return run_comp_basis_sampled(circuit, static_cast<std::uint64_t>(*c.n_shots), point_seed(*c.seed, index));
  }
  return run_comp_basis_exact(circuit);
}

void mark_circuit_deviation(const ExperimentConfig& c, ResultRow& row) {
  if (c.mode == Mode::exact && row.oracle) row.violation = std::abs(row.estimator - *row.oracle) > kCircuitTolerance;
}

// 0 <= P - I <= bound, with round-off slack.
bool outside_bound(double p, double ipr, double bound) {
  const double diff = p - ipr;
  return diff < -kBoundSlack || diff > bound + kBoundSlack;
}

std::vector<ResultRow> flatten(std::vector<std::vector<ResultRow>> nested) {
  std::vector<ResultRow> rows;
  for (auto& group : nested) {
    for (auto& r : group) rows.push_back(std::move(r));
  }
  return rows;
}

std::string num_label(const std::string& prefix, double v) { return prefix + format_number(v); }

}  // namespace

std::vector<ResultRow> run_oat_sweep(const ExperimentConfig& c) {
  const HamiltonianSpec spec = build_oat(c.sites);
  const CMatrix h = dense_matrix(spec);
  const Spectrum s = eigendecompose(h);
  const QuditState psi0 = product_state(c.sites, kPi / 4.0);
  const CVector c0 = s.eigenvectors.adjoint() * psi0.amplitudes();
  const BasisRotation rot = basis_rotation_x(c.sites);

  return parallel_map(c.t_grid.size(), [&](std::size_t i) {
    const auto start = Clock::now();
    const double t = c.t_grid[i];
    CVector phases(c0.size());
    for (Eigen::Index k = 0; k < c0.size(); ++k) phases[k] = std::polar(1.0, -s.eigenvalues[k] * t) * c0[k];
    CVector amps = s.eigenvectors * phases;
    amps.normalize();
    const QuditState psi(psi0.site_register(), amps);

    QuditState rotated = psi;
    for (Site k = 0; k < c.sites; ++k) apply_gate_inplace(rotated, hadamard(k));
    const IprReport oracle = ipr_direct(rotated.amplitudes(), c.q, "X");

    const IprEstimate est = run_copy_circuit(c, build_comp_basis_circuit(psi, c.q, rot, "X"), i);
    ResultRow row;
    row.experiment = c.experiment;
    row.variable = "t";
    row.x = t;
    row.estimator = est.point_value;
    row.oracle = oracle.value;
    row.std_error = est.std_error;
    row.n_shots = est.n_shots;
    row.aux = oracle.entropy;
    row.label = "X";
    mark_circuit_deviation(c, row);
    row.wall_ms = ms_since(start);
    return row;
  });
}

std::vector<ResultRow> run_pxp_sweep(const ExperimentConfig& c) {
  const QuditState psi = neel_state(c.sites);
  auto nested = parallel_map(c.h_grid.size(), [&](std::size_t i) {
    const auto start = Clock::now();
    const double h = c.h_grid[i];
    const HamiltonianSpec spec = build_pxp(c.sites, h, c.periodic);
    const Spectrum s = eigendecompose(dense_matrix(spec));
    const double oracle = ipr_in_eigenbasis(psi.amplitudes(), s, 2).value;
    std::optional<double> gap;
    if (s.groups.size() > 1) gap = min_gap(s);
    std::optional<double> dsz;
    std::string note = appendix_a_valid(s.spread(), c.t) ? "valid" : "outside-window";
    try {
      dsz = delta_sigma_z(spec, 0, psi.amplitudes()).delta();
    } catch (const Error& e) {
      if (e.code() != Errc::thermal_match) throw;
      note += ";no-thermal-match";
    }
    const double trotter = c.exact_evolution ? 0.0 : s.norm * s.norm * c.t * c.t / (2.0 * c.n_trotter);

    std::vector<ResultRow> rows;
    for (std::size_t j = 0; j < c.m_list.size(); ++j) {
      const int m = c.m_list[j];
      const EstimatorCircuit circuit = build_eigenbasis_circuit(psi, spec, c.t, m, c.n_trotter, c.exact_evolution);
      const IprEstimate est =
          c.mode == Mode::sampled
              ? run_eigenbasis_sampled(circuit, static_cast<std::uint64_t>(*c.n_shots),
                                       point_seed(*c.seed, i * c.m_list.size() + j), gap)
              : run_eigenbasis_circuit(circuit, gap);
      ResultRow row;
      row.experiment = c.experiment;
      row.variable = "h";
      row.x = h;
      row.m = m;
      row.estimator = est.point_value;
      row.oracle = oracle;
      row.error_bound = est.error_bound;
      row.trotter_bound = trotter;
      row.std_error = est.std_error;
      row.n_shots = est.n_shots;
      row.aux = dsz;
      row.label = note;
      if (c.mode == Mode::exact && est.error_bound) {
        row.violation = std::abs(est.point_value - oracle) > *est.error_bound + trotter + kBoundSlack;
      }
      rows.push_back(std::move(row));
    }
    const double ms = ms_since(start);
    for (auto& r : rows) r.wall_ms = ms / static_cast<double>(rows.size());
    return rows;
  });
  return flatten(std::move(nested));
}

std::vector<ResultRow> run_aklt_sweep(const ExperimentConfig& c) {
  return parallel_map(c.h_grid.size(), [&](std::size_t i) {
    const auto start = Clock::now();
    const double h = c.h_grid[i];
    const HamiltonianSpec spec = build_aklt(c.sites, h);
    const Spectrum s = eigendecompose(dense_matrix(spec));
    const GroundState gs = ground_state(s);
    const QuditState psi(spec.site_register, gs.state);
    const IprReport oracle = ipr_direct(gs.state, c.q, "Z");
    const IprEstimate est = run_copy_circuit(c, build_comp_basis_circuit(psi, c.q), i);

    ResultRow row;
    row.experiment = c.experiment;
    row.variable = "h";
    row.x = h;
    row.estimator = est.point_value;
    row.oracle = oracle.value;
    row.std_error = est.std_error;
    row.n_shots = est.n_shots;
    row.aux = oracle.entropy;
    row.label = gs.degeneracy > 1 ? "degenerate-ground;d=" + std::to_string(gs.degeneracy) +
                                        ";anchor=" + std::to_string(gs.anchor)
                                  : "unique-ground";
    mark_circuit_deviation(c, row);
    row.wall_ms = ms_since(start);
    return row;
  });
}

namespace {

struct Model {
  HamiltonianSpec spec;
  QuditState psi;
  std::string label;
};

// |+1, -1, +1, ...> for spin-1 chains.
QuditState staggered_spin1(std::size_t sites) {
  std::vector<Digit> digits(sites);
  for (std::size_t i = 0; i < sites; ++i) digits[i] = i % 2 == 0 ? 0 : 2;
  return basis_state(SiteRegister::uniform(sites, 3), digits);
}

Model make_model(const std::string& name, std::size_t sites, double h, bool periodic) {
  if (name == "pxp") return {build_pxp(sites, h, periodic), neel_state(sites), num_label("pxp-L" + std::to_string(sites) + "-h", h)};
  if (name == "aklt") return {build_aklt(sites, h), staggered_spin1(sites), num_label("aklt-L" + std::to_string(sites) + "-h", h)};
  if (name == "oat") return {build_oat(sites), product_state(sites, kPi / 4.0), "oat-L" + std::to_string(sites)};
  throw Error(Errc::config, "unknown model '" + name + "'");
}

// Rows of P_{0,m} against the degenerate-safe IPR for exact or Trotterized U.
std::vector<ResultRow> eigenbasis_rows(const ExperimentConfig& c, const Model& model, double t_config,
                                       const std::string& variable, double x) {
  const Spectrum s = eigendecompose(dense_matrix(model.spec));
  const double oracle = ipr_in_eigenbasis(model.psi.amplitudes(), s, 2).value;
  const double t = t_config > 0.0 ? t_config : default_time(s.spread());
  const bool valid = appendix_a_valid(s.spread(), t);
  std::optional<double> gap;
  if (s.groups.size() > 1) gap = min_gap(s);
  const double trotter = c.exact_evolution ? 0.0 : s.norm * s.norm * t * t / (2.0 * c.n_trotter);
  std::vector<ResultRow> rows;
  for (int m : c.m_list) {
    const EstimatorCircuit circuit = build_eigenbasis_circuit(model.psi, model.spec, t, m, c.n_trotter, c.exact_evolution);
    const IprEstimate est = run_eigenbasis_circuit(circuit, gap);
    ResultRow row;
    row.experiment = c.experiment;
    row.variable = variable;
    row.x = x;
    row.m = m;
    row.estimator = est.point_value;
    row.oracle = oracle;
    row.error_bound = est.error_bound;
    row.trotter_bound = trotter;
    row.aux = t;
    row.label = model.label + (valid ? ";valid" : ";outside-window");
    if (valid && c.exact_evolution && est.error_bound) {
      row.violation = outside_bound(est.point_value, oracle, *est.error_bound);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<ResultRow> run_m_convergence(const ExperimentConfig& c) {
  const auto start = Clock::now();
  auto rows = eigenbasis_rows(c, make_model(c.model, c.sites, c.h, c.periodic), c.t, "m", c.h);
  for (auto& r : rows) {
    r.x = r.m;
    r.wall_ms = ms_since(start) / static_cast<double>(rows.size());
  }
  return rows;
}

std::vector<ResultRow> run_bound_study(const ExperimentConfig& c) {
  const std::uint64_t seed = *c.seed;
  const SiteRegister reg = SiteRegister::uniform(c.ensemble_qubits, 2);

  // Random Hermitian ensemble, each trial with its own seeded stream.
  auto random_rows = parallel_map(static_cast<std::size_t>(c.ensemble), [&](std::size_t trial) {
    std::mt19937_64 rng(point_seed(seed, trial));
    const CMatrix h = random_hermitian(reg.total_dim(), rng);
    const QuditState psi = random_state(reg, rng);
    const Spectrum s = eigendecompose(h);
    const double oracle = ipr_in_eigenbasis(psi.amplitudes(), s, 2).value;
    const double t = default_time(s.spread());
    const double gap = min_gap(s);
    std::vector<ResultRow> rows;
    for (int m : c.m_list) {
      const IprEstimate est = run_eigenbasis_circuit(build_eigenbasis_circuit(psi, h, t, m), gap);
      ResultRow row;
      row.experiment = c.experiment;
      row.variable = "trial";
      row.x = static_cast<double>(trial);
      row.m = m;
      row.estimator = est.point_value;
      row.oracle = oracle;
      row.error_bound = est.error_bound;
      row.aux = t;
      row.label = "random-hermitian;valid";
      row.violation = outside_bound(est.point_value, oracle, *est.error_bound);
      rows.push_back(std::move(row));
    }
    return rows;
  });
  std::vector<ResultRow> rows = flatten(std::move(random_rows));

  // Benchmark Hamiltonians in exact-evolution mode at t = pi / spread.
  ExperimentConfig exact = c;
  exact.exact_evolution = true;
  const std::vector<Model> benchmarks{
      make_model("pxp", 6, 0.3, true), make_model("pxp", 6, 0.5, true), make_model("pxp", 6, 0.8, true),
      make_model("aklt", 3, 1.0, false), make_model("oat", 4, 0.0, false)};
  auto bench_rows = parallel_map(benchmarks.size(), [&](std::size_t k) {
    return eigenbasis_rows(exact, benchmarks[k], 0.0, "benchmark", static_cast<double>(k));
  });
  for (auto& group : bench_rows) {
    for (auto& r : group) rows.push_back(std::move(r));
  }

  // First-order Trotter operator-norm error against ||H||^2 t^2 / (2 n_T).
  if (!c.trotter_steps.empty()) {
    std::vector<Model> trotter_models;
    for (double h : {0.0, 0.5, 1.0}) {
      trotter_models.push_back(make_model("pxp", 4, h, true));
      trotter_models.push_back(make_model("aklt", 4, h, false));
    }
    const double t = c.t > 0.0 ? c.t : 1.0;
    auto trotter_rows = parallel_map(trotter_models.size(), [&](std::size_t k) {
      const Model& model = trotter_models[k];
      const CMatrix h = dense_matrix(model.spec);
      const double norm = spectral_norm_hermitian(h);
      const CMatrix exact_u = hermitian_expm(h, t);
      std::vector<ResultRow> out;
      for (int n : c.trotter_steps) {
        const CMatrix u = circuit_unitary(trotter_circuit(model.spec, t, n));
        ResultRow row;
        row.experiment = c.experiment;
        row.variable = "n_T";
        row.x = n;
        row.estimator = operator_norm(u - exact_u);
        row.trotter_bound = norm * norm * t * t / (2.0 * n);
        row.aux = t;
        row.label = "trotter;" + model.label;
        row.violation = row.estimator > *row.trotter_bound * (1.0 + 1e-12);
        out.push_back(std::move(row));
      }
      // Refinement must help: the finest step count beats the coarsest.
      if (out.size() > 1) {
        const auto [lo, hi] = std::minmax_element(c.trotter_steps.begin(), c.trotter_steps.end());
        const auto& coarse = out[static_cast<std::size_t>(lo - c.trotter_steps.begin())];
        auto& fine = out[static_cast<std::size_t>(hi - c.trotter_steps.begin())];
        if (*hi > *lo && !(fine.estimator < coarse.estimator)) fine.violation = true;
      }
      return out;
    });
    for (auto& group : trotter_rows) {
      for (auto& r : group) rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  validate(config);
  const std::string& e = config.experiment;
  if (e == "oat_sweep") return run_oat_sweep(config);
  if (e == "pxp_sweep") return run_pxp_sweep(config);
  if (e == "aklt_sweep") return run_aklt_sweep(config);
  if (e == "m_convergence") return run_m_convergence(config);
  return run_bound_study(config);
}

std::size_t count_violations(const std::vector<ResultRow>& rows) {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const ResultRow& r) { return r.violation; }));
}

}  // namespace iprqs
