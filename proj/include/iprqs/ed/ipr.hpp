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

#include <cmath>
#include <string>
#include <vector>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/types.hpp"
#include "iprqs/ed/spectrum.hpp"

namespace iprqs {

struct IprReport {
  int q = 2;
  double value = 0.0;
  double entropy = 0.0;
  std::string basis_label;
};

/// log2(value) / (1 - q). Throws Errc::domain for value <= 0 or q < 2.
double participation_entropy(double value, int q);

/// sum_i p_i^q for a probability vector; no normalization check.
double moment(const RVector& p, int q);

/// sum_i |c_i|^{2q}. Throws Errc::not_normalized if |1 - sum |c_i|^2| > 1e-9.
template <typename Derived>
IprReport ipr_direct(const Eigen::MatrixBase<Derived>& amplitudes, int q, std::string basis_label = "Z") {
  if (q < 2) throw Error(Errc::domain, "IPR order q must be at least 2");
  const RVector p = amplitudes.cwiseAbs2().template cast<double>();
  if (std::abs(p.sum() - 1.0) > kDriftTolerance) {
    throw Error(Errc::not_normalized, "ipr_direct: amplitudes are not normalized");
  }
  const double value = moment(p, q);
  return IprReport{q, value, participation_entropy(value, q), std::move(basis_label)};
}

/// p_j = <psi|P_j|psi> for each degeneracy group. Throws Errc::dimension_mismatch.
RVector group_weights(const CVector& state, const Spectrum& spectrum);

/// Coefficients <eps_i|psi>.
CVector eigen_coefficients(const CVector& state, const Spectrum& spectrum);

/// sum_i |<eps_i|psi>|^{2q}; delegates to ipr_degenerate when any group is degenerate.
IprReport ipr_in_eigenbasis(const CVector& state, const Spectrum& spectrum, int q);

/// sum_j p_j^q over degeneracy groups.
IprReport ipr_degenerate(const CVector& state, const Spectrum& spectrum, int q);

}  // namespace iprqs
