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

#include "iprqs/hamiltonians/trotter.hpp"

#include <numeric>
#include <string>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/linalg.hpp"
#include "iprqs/hamiltonians/term_matrix.hpp"

namespace iprqs {

std::vector<TermGroup> group_terms(const HamiltonianSpec& spec) {
  spec.validate();
  std::vector<TermGroup> groups;
  Complex pending_constant = 0.0;
  for (const auto& term : spec.terms) {
    if (term.factors.size() > kMaxTermSupport) {
      throw Error(Errc::unsupported_term, spec.label + ": term support of " + std::to_string(term.factors.size()) +
                                              " sites exceeds " + std::to_string(kMaxTermSupport));
    }
    if (term.factors.empty()) {
      if (groups.empty()) {
        pending_constant += term.coefficient;
      } else {
        groups.back().generator += term.coefficient * CMatrix::Identity(groups.back().generator.rows(),
                                                                        groups.back().generator.cols());
      }
      continue;
    }
    const std::vector<Site> support = term.support();
    const CMatrix m = term.coefficient * detail::term_local_matrix(term);
    if (!groups.empty() && groups.back().support == support) {
      groups.back().generator += m;
    } else {
      groups.push_back(TermGroup{support, m});
    }
  }
  if (groups.empty()) {
    if (pending_constant != 0.0 && spec.site_register.size() > 0) {
      const auto d = static_cast<Eigen::Index>(spec.site_register.dim(0));
      groups.push_back(TermGroup{{0}, pending_constant * CMatrix::Identity(d, d)});
    }
    return groups;
  }
  auto& first = groups.front().generator;
  first += pending_constant * CMatrix::Identity(first.rows(), first.cols());
  for (const auto& g : groups) {
    if (!is_hermitian(g.generator, 1e-12)) {
      throw Error(Errc::not_hermitian, spec.label + ": grouped Trotter generator is not Hermitian");
    }
  }
  return groups;
}

std::vector<GateOp> trotter_step_gates(const HamiltonianSpec& spec, double dt) {
  std::vector<GateOp> gates;
  for (const auto& g : group_terms(spec)) {
    gates.push_back(dense_gate(g.support, hermitian_expm(g.generator, dt), "exp"));
  }
  return gates;
}

CircuitPlan trotter_circuit(const HamiltonianSpec& spec, double t, int n_trotter) {
  if (n_trotter < 1) throw Error(Errc::domain, "n_T must be at least 1");
  const std::vector<GateOp> step = trotter_step_gates(spec, t / n_trotter);
  CircuitPlan plan{spec.site_register, {}, {}, {}, {}};
  for (int k = 0; k < n_trotter; ++k) plan.append(step);
  plan.info.kind = "trotter";
  plan.info.t = t;
  plan.info.n_trotter = n_trotter;
  return plan;
}

GateOp exact_evolution_gate(const HamiltonianSpec& spec, double t, Index cap) {
  std::vector<Site> all(spec.site_register.size());
  std::iota(all.begin(), all.end(), Site{0});
  return dense_gate(std::move(all), hermitian_expm(dense_matrix(spec, cap), t), "expH");
}

std::uint64_t gate_count_formula(int m, std::uint64_t n_t) {
  const auto mm = static_cast<std::uint64_t>(m);
  return (std::uint64_t{1} << (mm + 1)) * n_t + mm * mm;
}

std::uint64_t gate_count_estimate(const HamiltonianSpec& spec, int m, int n_trotter) {
  return gate_count_formula(m, gate_count(trotter_circuit(spec, 1.0, n_trotter)));
}

}  // namespace iprqs
