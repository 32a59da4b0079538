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

#include "iprqs/ed/spectrum.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"

namespace iprqs {

/// Midpoint-rule average of |<psi|e^{-iHt}|psi>|^2 over t in [0, t_max].
/// Throws Errc::domain for t_max <= 0 or n_samples = 0.
double survival_average_numeric(const CVector& state, const Spectrum& spectrum, double t_max,
                                std::uint64_t n_samples);
double survival_average_numeric(const CVector& state, const CMatrix& h, double t_max, std::uint64_t n_samples);

struct Thermalization {
  double long_time = 0.0;  // diagonal-ensemble average
  double thermal = 0.0;  // canonical, energy matched
  double beta = 0.0;
  double energy = 0.0;

  double delta() const { return long_time - thermal; }
};

/// Diagonal-ensemble sum_j <P_j psi|O|P_j psi> minus the canonical value at
/// the beta whose energy equals <psi|H|psi>. beta is bisected in
/// [-100/|H|, 100/|H|]; throws Errc::thermal_match if the energy is outside.
Thermalization thermalization(const Spectrum& spectrum, const CMatrix& observable, const CVector& state);

/// Pauli Z on qubit sites, S^z = diag(s, s-1, ..., -s) otherwise.
CMatrix z_operator(Digit dim);

/// Basis states reachable from the support of `state` through nonzero
/// off-diagonal elements of H, ascending. H is block diagonal over them.
std::vector<Index> dynamical_sector(const CMatrix& h, const CVector& state);

/// thermalization() for the z operator on `site`, restricted to the
/// dynamical sector of `state` so that the canonical ensemble only weighs
/// states the evolution can reach.
Thermalization delta_sigma_z(const HamiltonianSpec& spec, Site site, const CVector& state);

}  // namespace iprqs
