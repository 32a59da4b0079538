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

#include "iprqs/circuits/comp_basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"

namespace iprqs {

BasisRotation basis_rotation_x(std::size_t sites) {
  if (sites == 0) throw Error(Errc::domain, "basis rotation needs at least one site");
  CMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return BasisRotation(sites, h);
}

EstimatorCircuit build_comp_basis_circuit(const QuditState& psi, int q, const std::optional<BasisRotation>& rotation,
                                          std::string basis_label) {
  if (q < 2) throw Error(Errc::domain, "q must be at least 2");
  const SiteRegister& reg = psi.site_register();
  const auto d = reg.uniform_dim();
  if (!d) throw Error(Errc::unsupported_register, "copy-based estimator needs a uniform local dimension");
  const std::size_t n = reg.size();
  if (rotation && rotation->size() != n) {
    throw Error(Errc::gate_shape, "basis rotation has " + std::to_string(rotation->size()) + " entries for " +
                                      std::to_string(n) + " sites");
  }

  const CompBasisLayout lay{n, q};
  std::vector<Digit> dims{2};
  for (int k = 0; k < 2 * q - 1; ++k) dims.insert(dims.end(), reg.local_dims().begin(), reg.local_dims().end());

  EstimatorCircuit c{CircuitPlan{SiteRegister(std::move(dims)), {}, {0}, {0}, {}}, psi, 1,
                     static_cast<std::size_t>(q), n * static_cast<std::size_t>(q - 1)};

  if (rotation) {
    for (int k = 0; k < q; ++k) {
      for (std::size_t s = 0; s < n; ++s) c.plan.add(dense_gate({lay.copy_site(k, s)}, (*rotation)[s], "V"));
    }
  }
  for (int k = 1; k < q; ++k) {
    for (std::size_t s = 0; s < n; ++s) {
      c.plan.add(*d == 2 ? cnot(lay.copy_site(k, s), lay.blank_site(k, s))
                         : sum_d(lay.copy_site(k, s), lay.blank_site(k, s)));
    }
  }
  c.plan.add(hadamard(lay.ancilla()));
  std::vector<std::vector<Site>> blocks(static_cast<std::size_t>(q));
  for (int k = 0; k < q; ++k) {
    for (std::size_t s = 0; s < n; ++s) blocks[static_cast<std::size_t>(k)].push_back(lay.copy_site(k, s));
  }
  c.plan.add(controlled_block_cycle(lay.ancilla(), blocks));
  c.plan.add(hadamard(lay.ancilla()));

  c.plan.info.kind = "comp_basis";
  c.plan.info.q = q;
  c.plan.info.basis_label = !basis_label.empty() ? std::move(basis_label) : (rotation ? "V" : "Z");
  c.plan.validate();
  return c;
}

namespace {

IprEstimate base_estimate(const EstimatorCircuit& c) {
  IprEstimate e;
  e.q = c.plan.info.q;
  e.basis_label = c.plan.info.basis_label;
  return e;
}

}  // namespace

IprEstimate run_comp_basis_exact(const EstimatorCircuit& circuit, Backend backend) {
  IprEstimate e = base_estimate(circuit);
  e.point_value = 2.0 * readout_probability(circuit, backend) - 1.0;
  return e;
}

IprEstimate run_comp_basis_sampled(const EstimatorCircuit& circuit, std::uint64_t n_shots, std::uint64_t seed,
                                   Backend backend) {
  if (n_shots == 0) throw Error(Errc::domain, "n_shots must be at least 1");
  const double p0 = std::clamp(readout_probability(circuit, backend), 0.0, 1.0);
  const std::vector<double> probs{p0, 1.0 - p0};
  const auto counts = sample_counts(probs, n_shots, seed);
  const double p_hat = static_cast<double>(counts[0]) / static_cast<double>(n_shots);
  IprEstimate e = base_estimate(circuit);
  e.n_shots = n_shots;
  e.point_value = 2.0 * p_hat - 1.0;
  e.std_error = 2.0 * std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(n_shots));
  return e;
}

std::uint64_t required_shots(int q, double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw Error(Errc::domain, "epsilon must be positive");
  if (q < 1) throw Error(Errc::domain, "q must be positive");
  const double v = static_cast<double>(q) / (epsilon * epsilon);
  const double r = std::round(v);
  if (std::abs(v - r) <= 1e-9 * v) return static_cast<std::uint64_t>(r);
  return static_cast<std::uint64_t>(std::ceil(v));
}

}  // namespace iprqs
