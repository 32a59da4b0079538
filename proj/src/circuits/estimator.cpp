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

#include "iprqs/circuits/estimator.hpp"

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"

namespace iprqs {

namespace {

SiteRegister qubits(std::size_t n) { return SiteRegister(std::vector<Digit>(n, 2)); }

std::vector<Digit> zeros_of(const SiteRegister& reg) { return std::vector<Digit>(reg.size(), 0); }

SiteRegister blank_register(const EstimatorCircuit& c) {
  const auto& dims = c.psi.site_register().local_dims();
  std::vector<Digit> out;
  for (std::size_t k = 0; k < c.blank_sites; ++k) out.push_back(dims[k % dims.size()]);
  return SiteRegister(std::move(out));
}

bool use_dense(const EstimatorCircuit& c, Backend backend) {
  switch (backend) {
    case Backend::dense:
      return true;
    case Backend::sparse:
      return false;
    case Backend::automatic:
      break;
  }
  return c.plan.site_register.total_dim() <= kAutoDenseLimit || c.blank_sites == 0;
}

}  // namespace

QuditState EstimatorCircuit::initial_dense() const {
  QuditState s;
  bool started = false;
  auto push = [&](const QuditState& part) {
    s = started ? tensor_product(s, part) : part;
    started = true;
  };
  if (ancillas > 0) {
    const SiteRegister a = qubits(ancillas);
    push(basis_state(a, zeros_of(a)));
  }
  for (std::size_t k = 0; k < copies; ++k) push(psi);
  if (blank_sites > 0) {
    const SiteRegister b = blank_register(*this);
    push(basis_state(b, zeros_of(b)));
  }
  if (!(s.site_register() == plan.site_register)) {
    throw Error(Errc::dimension_mismatch, "estimator input does not match the plan register");
  }
  return s;
}

SparseState EstimatorCircuit::initial_sparse() const {
  SparseState s;
  bool started = false;
  auto push = [&](const SparseState& part) {
    s = started ? tensor_product(s, part) : part;
    started = true;
  };
  if (ancillas > 0) {
    const SiteRegister a = qubits(ancillas);
    push(SparseState(a, {{0, Complex(1.0)}}));
  }
  const SparseState p = SparseState::from_dense(psi);
  for (std::size_t k = 0; k < copies; ++k) push(p);
  if (blank_sites > 0) push(SparseState(blank_register(*this), {{0, Complex(1.0)}}));
  if (!(s.site_register() == plan.site_register)) {
    throw Error(Errc::dimension_mismatch, "estimator input does not match the plan register");
  }
  return s;
}

std::vector<double> readout_distribution(const EstimatorCircuit& circuit, Backend backend) {
  const auto& sites = circuit.plan.readout_sites;
  if (use_dense(circuit, backend)) {
    QuditState s = circuit.initial_dense();
    execute(circuit.plan, s);
    return marginal_distribution(s, sites);
  }
  SparseState s = circuit.initial_sparse();
  execute(circuit.plan, s);
  return marginal_distribution(s, sites);
}

double readout_probability(const EstimatorCircuit& circuit, Backend backend) {
  const auto& sites = circuit.plan.readout_sites;
  const auto& target = circuit.plan.readout_target;
  if (use_dense(circuit, backend)) {
    QuditState s = circuit.initial_dense();
    execute(circuit.plan, s);
    return outcome_probability(s, sites, target);
  }
  SparseState s = circuit.initial_sparse();
  execute(circuit.plan, s);
  return outcome_probability(s, sites, target);
}

}  // namespace iprqs
