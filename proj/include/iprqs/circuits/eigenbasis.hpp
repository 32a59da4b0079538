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
#include <optional>

#include "iprqs/circuits/estimator.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"

namespace iprqs {

/// Site layout: [m ancillas][copy 1][copy 2]. Ancilla k carries binary
/// weight 2^{m-1-k}, so the U^{2^j} block is controlled by ancilla m-1-j.
struct EigenbasisLayout {
  int m = 1;
  std::size_t n = 0;

  Site ancilla(int k) const { return static_cast<Site>(k); }
  Site copy_site(int copy, std::size_t s) const {
    return static_cast<Site>(m) + static_cast<Site>(copy) * n + s;
  }
};

/// Hadamards on the ancillas, controlled U^{2^j} on copy 1 and (U^dagger)^{2^j}
/// on copy 2 for each ancilla bit j, then the QFT on the ancillas; readout is
/// the all-zeros ancilla pattern. U is the dense e^{-iHt} when
/// `exact_evolution`, else n_T first-order Trotter steps. Throws Errc::domain
/// for m < 1, t <= 0 or n_T < 1, and Errc::size_cap if the exact U is too large.
EstimatorCircuit build_eigenbasis_circuit(const QuditState& psi, const HamiltonianSpec& h, double t, int m,
                                          int n_trotter, bool exact_evolution);

/// Exact-evolution variant for a Hamiltonian given as a dense matrix over
/// psi's register.
EstimatorCircuit build_eigenbasis_circuit(const QuditState& psi, const CMatrix& h, double t, int m);

/// Exact all-zeros probability; attaches appendix_a_bound(m, delta, t) when delta is given.
IprEstimate run_eigenbasis_circuit(const EstimatorCircuit& circuit, std::optional<double> delta = std::nullopt);

/// Frequency of the all-zeros outcome over multinomial draws on the ancillas.
IprEstimate run_eigenbasis_sampled(const EstimatorCircuit& circuit, std::uint64_t n_shots, std::uint64_t seed,
                                   std::optional<double> delta = std::nullopt);

/// 4^{-m} pi^2 / (delta^2 t^2). Throws Errc::domain for delta <= 0, t <= 0 or m < 0.
double appendix_a_bound(int m, double delta, double t);

/// The bound holds when every |eps_i - eps_j| t lies in (0, pi], i.e. spread * t <= pi.
bool appendix_a_valid(double spread, double t);

/// pi / spread, the longest time inside the validity window.
double default_time(double spread);

}  // namespace iprqs
