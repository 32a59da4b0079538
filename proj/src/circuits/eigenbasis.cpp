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

#include "iprqs/circuits/eigenbasis.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"
#include "iprqs/core/linalg.hpp"
#include "iprqs/hamiltonians/trotter.hpp"

namespace iprqs {

namespace {

std::vector<GateOp> evolution_body(const HamiltonianSpec& h, double t, int n_trotter, bool exact) {
  if (exact) return {exact_evolution_gate(h, t)};
  const CircuitPlan plan = trotter_circuit(h, t, n_trotter);
  std::vector<GateOp> body;
  body.reserve(plan.steps.size());
  for (const auto& step : plan.steps) body.push_back(std::get<GateOp>(step));
  return body;
}

std::vector<GateOp> shifted(const std::vector<GateOp>& gates, Site offset) {
  std::vector<GateOp> out;
  out.reserve(gates.size());
  for (const auto& g : gates) out.push_back(shift_sites(g, offset));
  return out;
}

std::vector<GateOp> inverse(const std::vector<GateOp>& gates) {
  std::vector<GateOp> out;
  out.reserve(gates.size());
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) out.push_back(adjoint(*it));
  return out;
}

}  // namespace

namespace {

EstimatorCircuit assemble(const QuditState& psi, const std::vector<GateOp>& u, double t, int m, int n_trotter) {
  if (m < 1) throw Error(Errc::domain, "m must be at least 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(Errc::domain, "t must be positive");
  const SiteRegister& reg = psi.site_register();
  const EigenbasisLayout lay{m, reg.size()};

  std::vector<Digit> dims(static_cast<std::size_t>(m), 2);
  for (int k = 0; k < 2; ++k) dims.insert(dims.end(), reg.local_dims().begin(), reg.local_dims().end());

  std::vector<Site> ancillas;
  for (int k = 0; k < m; ++k) ancillas.push_back(lay.ancilla(k));
  CircuitPlan plan{SiteRegister(std::move(dims)), {}, ancillas, std::vector<Digit>(ancillas.size(), 0), {}};

  const auto u1 = std::make_shared<const std::vector<GateOp>>(shifted(u, lay.copy_site(0, 0)));
  const auto u2 = std::make_shared<const std::vector<GateOp>>(shifted(inverse(u), lay.copy_site(1, 0)));

  for (Site a : ancillas) plan.add(hadamard(a));
  for (int j = 0; j < m; ++j) {
    const Control ctl{lay.ancilla(m - 1 - j), 1};
    const std::uint64_t reps = std::uint64_t{1} << j;
    plan.add(ControlledRepeat{{ctl}, u1, reps, "U^" + std::to_string(reps)});
    plan.add(ControlledRepeat{{ctl}, u2, reps, "Udag^" + std::to_string(reps)});
  }
  plan.append(qft_gates(ancillas));

  plan.info.kind = "eigenbasis";
  plan.info.q = 2;
  plan.info.m = m;
  plan.info.t = t;
  plan.info.n_trotter = n_trotter;
  plan.info.basis_label = "H";
  plan.validate();
  return EstimatorCircuit{std::move(plan), psi, static_cast<std::size_t>(m), 2, 0};
}

}  // namespace

EstimatorCircuit build_eigenbasis_circuit(const QuditState& psi, const HamiltonianSpec& h, double t, int m,
                                          int n_trotter, bool exact_evolution) {
  if (n_trotter < 1) throw Error(Errc::domain, "n_T must be at least 1");
  if (!(psi.site_register() == h.site_register)) {
    throw Error(Errc::dimension_mismatch, "state and Hamiltonian registers differ");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(Errc::domain, "t must be positive");
  return assemble(psi, evolution_body(h, t, n_trotter, exact_evolution), t, m, exact_evolution ? 0 : n_trotter);
}

EstimatorCircuit build_eigenbasis_circuit(const QuditState& psi, const CMatrix& h, double t, int m) {
  const Index n = psi.site_register().total_dim();
  if (static_cast<Index>(h.rows()) != n || static_cast<Index>(h.cols()) != n) {
    throw Error(Errc::dimension_mismatch, "Hamiltonian does not match the state dimension");
  }
  if (!(t > 0.0) || !std::isfinite(t)) throw Error(Errc::domain, "t must be positive");
  std::vector<Site> all(psi.site_register().size());
  std::iota(all.begin(), all.end(), Site{0});
  return assemble(psi, {dense_gate(std::move(all), hermitian_expm(h, t), "expH")}, t, m, 0);
}

namespace {

IprEstimate base_estimate(const EstimatorCircuit& c, std::optional<double> delta) {
  IprEstimate e;
  e.q = 2;
  e.m = c.plan.info.m;
  e.t = c.plan.info.t;
  e.n_trotter = c.plan.info.n_trotter;
  e.basis_label = c.plan.info.basis_label;
  if (delta) e.error_bound = appendix_a_bound(e.m, *delta, e.t);
  return e;
}

}  // namespace

IprEstimate run_eigenbasis_circuit(const EstimatorCircuit& circuit, std::optional<double> delta) {
  IprEstimate e = base_estimate(circuit, delta);
  e.point_value = readout_probability(circuit, Backend::dense);
  return e;
}

IprEstimate run_eigenbasis_sampled(const EstimatorCircuit& circuit, std::uint64_t n_shots, std::uint64_t seed,
                                   std::optional<double> delta) {
  if (n_shots == 0) throw Error(Errc::domain, "n_shots must be at least 1");
  const std::vector<double> probs = readout_distribution(circuit, Backend::dense);
  const auto counts = sample_counts(probs, n_shots, seed);
  const double p_hat = static_cast<double>(counts[0]) / static_cast<double>(n_shots);
  IprEstimate e = base_estimate(circuit, delta);
  e.n_shots = n_shots;
  e.point_value = p_hat;
  e.std_error = std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n_shots));
  return e;
}

double appendix_a_bound(int m, double delta, double t) {
  if (m < 0) throw Error(Errc::domain, "m must be non-negative");
  if (!(delta > 0.0)) throw Error(Errc::domain, "gap must be positive");
  if (!(t > 0.0)) throw Error(Errc::domain, "t must be positive");
  return std::ldexp(1.0, -2 * m) * kPi * kPi / (delta * delta * t * t);
}

bool appendix_a_valid(double spread, double t) { return spread * t <= kPi * (1.0 + 1e-12); }

double default_time(double spread) {
  if (!(spread > 0.0)) throw Error(Errc::domain, "spectral spread must be positive");
  return kPi / spread;
}

}  // namespace iprqs
