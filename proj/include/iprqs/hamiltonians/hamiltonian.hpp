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

#include <string>
#include <vector>

#include "iprqs/core/site_register.hpp"
#include "iprqs/hamiltonians/local_operator.hpp"

namespace iprqs {

/// coefficient * (product of factors). An empty factor list is the identity.
struct HamiltonianTerm {
  double coefficient = 0.0;
  std::vector<LocalOperator> factors;

  std::vector<Site> support() const;
};

/// Sorts factors by site; throws Errc::unsupported_term on repeated sites.
HamiltonianTerm make_term(double coefficient, std::vector<LocalOperator> factors);

struct HamiltonianSpec {
  SiteRegister site_register;
  std::vector<HamiltonianTerm> terms;
  std::string label;

  /// Throws Errc::gate_shape for bad sites or factor shapes.
  void validate() const;
};

/// Coefficient of the ordered double sum over (i, j) in the one-axis
/// twisting Hamiltonian. At 0.5 the x-polarized product state reaches the
/// x-GHZ state at t = pi/4; the coefficient 0.25 reaches it at t = pi/2.
inline constexpr double kOatCoupling = 0.5;

/// coupling * sum_{i,j} Z_i Z_j over ordered pairs: 2 * coupling * Z_i Z_j for
/// each i < j, then the i = j contributions as one constant coupling * L term.
HamiltonianSpec build_oat(std::size_t sites, double coupling = kOatCoupling);

/// sum_i P_{i-1} X_i P_{i+1} - h sum_i Z_i with P = |0><0|. Kinetic terms come
/// first (by site), then field terms. Open chains drop the missing projector.
/// Throws Errc::domain for periodic chains shorter than 3.
HamiltonianSpec build_pxp(std::size_t sites, double h, bool periodic = true);

/// Spin-1 AKLT chain with open boundaries and field -(h/L) sum_i S^z_i. Each bond
/// carries 1/2 S.S, the biquadratic (S.S)^2 / 6 expanded into nine products
/// (S^a S^b) x (S^a S^b), and the constant 1/3.
HamiltonianSpec build_aklt(std::size_t sites, double h);

inline constexpr Index kDefaultDenseCap = Index{1} << 14;

/// Throws Errc::size_cap above `cap` and Errc::not_hermitian if the sum is not
/// Hermitian within 1e-12.
CMatrix dense_matrix(const HamiltonianSpec& spec, Index cap = kDefaultDenseCap);

/// Single-site operator embedded in the full register.
CMatrix site_operator(const SiteRegister& reg, Site site, const CMatrix& op);

}  // namespace iprqs
