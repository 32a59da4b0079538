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

#pragma once

#include <cstdint>
#include <vector>

#include "iprqs/core/circuit.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"

namespace iprqs {

inline constexpr std::size_t kMaxTermSupport = 3;

/// Consecutive terms sharing a support form one Hermitian generator; a
/// constant term joins its neighbour. Each group becomes one dense gate.
struct TermGroup {
  std::vector<Site> support;
  CMatrix generator;
};

/// Throws Errc::unsupported_term for supports wider than kMaxTermSupport and
/// Errc::not_hermitian for a group whose generator is not Hermitian.
std::vector<TermGroup> group_terms(const HamiltonianSpec& spec);

/// One first-order step e^{-i H_1 dt} ... e^{-i H_k dt}, groups in order.
std::vector<GateOp> trotter_step_gates(const HamiltonianSpec& spec, double dt);

/// n_T repetitions of trotter_step_gates(spec, t / n_T). Throws Errc::domain
/// for n_T = 0.
CircuitPlan trotter_circuit(const HamiltonianSpec& spec, double t, int n_trotter);

/// Single dense gate e^{-iHt} on every site. Subject to the dense cap.
GateOp exact_evolution_gate(const HamiltonianSpec& spec, double t, Index cap = kDefaultDenseCap);

/// 2^{m+1} N_t + m^2.
std::uint64_t gate_count_formula(int m, std::uint64_t n_t);

/// gate_count_formula with N_t the emitted gate count of trotter_circuit.
std::uint64_t gate_count_estimate(const HamiltonianSpec& spec, int m, int n_trotter);

}  // namespace iprqs
