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

#include "iprqs/ed/ipr.hpp"

namespace iprqs {

double participation_entropy(double value, int q) {
  if (q < 2) throw Error(Errc::domain, "IPR order q must be at least 2");
  if (!(value > 0.0)) throw Error(Errc::domain, "participation entropy needs a positive IPR");
  return std::log2(value) / static_cast<double>(1 - q);
}

double moment(const RVector& p, int q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    double x = 1.0;
    for (int k = 0; k < q; ++k) x *= p[i];
    s += x;
  }
  return s;
}

CVector eigen_coefficients(const CVector& state, const Spectrum& spectrum) {
  if (static_cast<Index>(state.size()) != spectrum.dim()) {
    throw Error(Errc::dimension_mismatch, "state dimension " + std::to_string(state.size()) +
                                              " does not match spectrum dimension " + std::to_string(spectrum.dim()));
  }
  return spectrum.eigenvectors.adjoint() * state;
}

RVector group_weights(const CVector& state, const Spectrum& spectrum) {
  const RVector c2 = eigen_coefficients(state, spectrum).cwiseAbs2();
  RVector p = RVector::Zero(static_cast<Eigen::Index>(spectrum.groups.size()));
  for (std::size_t j = 0; j < spectrum.groups.size(); ++j) {
    for (Index i : spectrum.groups[j]) p[static_cast<Eigen::Index>(j)] += c2[static_cast<Eigen::Index>(i)];
  }
  return p;
}

IprReport ipr_in_eigenbasis(const CVector& state, const Spectrum& spectrum, int q) {
  if (spectrum.degenerate()) return ipr_degenerate(state, spectrum, q);
  return ipr_direct(eigen_coefficients(state, spectrum), q, "H");
}

IprReport ipr_degenerate(const CVector& state, const Spectrum& spectrum, int q) {
  if (q < 2) throw Error(Errc::domain, "IPR order q must be at least 2");
  const RVector p = group_weights(state, spectrum);
  if (std::abs(p.sum() - 1.0) > kDriftTolerance) {
    throw Error(Errc::not_normalized, "ipr_degenerate: state is not normalized");
  }
  const double value = moment(p, q);
  return IprReport{q, value, participation_entropy(value, q), "H"};
}

}  // namespace iprqs
