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

#include "iprqs/ed/spectrum.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/linalg.hpp"

namespace iprqs {

bool Spectrum::degenerate() const {
  return std::any_of(groups.begin(), groups.end(), [](const auto& g) { return g.size() > 1; });
}

double Spectrum::spread() const {
  if (eigenvalues.size() == 0) return 0.0;
  return eigenvalues[eigenvalues.size() - 1] - eigenvalues[0];
}

std::vector<double> Spectrum::group_energies() const {
  std::vector<double> e;
  e.reserve(groups.size());
  for (const auto& g : groups) {
    double s = 0.0;
    for (Index i : g) s += eigenvalues[static_cast<Eigen::Index>(i)];
    e.push_back(s / static_cast<double>(g.size()));
  }
  return e;
}

Spectrum eigendecompose(const CMatrix& h, std::optional<double> deg_tol) {
  if (h.rows() != h.cols()) throw Error(Errc::dimension_mismatch, "eigendecompose needs a square matrix");
  if (!is_hermitian(h, kHermitianTolerance)) throw Error(Errc::not_hermitian, "eigendecompose: matrix is not Hermitian");
  Spectrum s;
  if (h.rows() == 0) return s;
  Eigen::SelfAdjointEigenSolver<CMatrix> es(h);
  if (es.info() != Eigen::Success) throw Error(Errc::numerical_drift, "eigendecompose: solver did not converge");
  s.eigenvalues = es.eigenvalues();
  s.eigenvectors = es.eigenvectors();
  s.norm = std::max(std::abs(s.eigenvalues[0]), std::abs(s.eigenvalues[s.eigenvalues.size() - 1]));
  s.deg_tol = deg_tol.value_or(kRelativeDegTol * s.norm);
  s.groups.push_back({0});
  for (Eigen::Index i = 1; i < s.eigenvalues.size(); ++i) {
    if (s.eigenvalues[i] - s.eigenvalues[i - 1] > s.deg_tol) s.groups.emplace_back();
    s.groups.back().push_back(static_cast<Index>(i));
  }
  return s;
}

double min_gap(const Spectrum& spectrum) {
  if (spectrum.groups.size() < 2) throw Error(Errc::no_gap, "spectrum has a single degeneracy group");
  const std::vector<double> e = spectrum.group_energies();
  double gap = e[1] - e[0];
  for (std::size_t j = 2; j < e.size(); ++j) gap = std::min(gap, e[j] - e[j - 1]);
  return gap;
}

GroundState ground_state(const Spectrum& spectrum) {
  if (spectrum.groups.empty()) throw Error(Errc::dimension_mismatch, "empty spectrum");
  const auto& g = spectrum.groups.front();
  GroundState out;
  out.energy = spectrum.eigenvalues[0];
  out.degeneracy = g.size();
  const auto n = spectrum.eigenvectors.rows();
  CMatrix v(n, static_cast<Eigen::Index>(g.size()));
  for (std::size_t a = 0; a < g.size(); ++a) v.col(static_cast<Eigen::Index>(a)) = spectrum.eigenvectors.col(static_cast<Eigen::Index>(g[a]));
  // Diagonal of the projector onto the ground level.
  const RVector weight = v.rowwise().squaredNorm();
  Eigen::Index k = 0;
  for (Eigen::Index i = 1; i < n; ++i) {
    if (weight[i] > weight[k] * (1.0 + 1e-12) + 1e-15) k = i;
  }
  out.anchor = static_cast<Index>(k);
  CVector psi = v * v.row(k).adjoint();
  psi /= psi.norm();
  // Fix the global phase so entry k is real and positive.
  psi *= std::polar(1.0, -std::arg(psi[k]));
  out.state = std::move(psi);
  return out;
}

CMatrix random_hermitian(Index dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  const auto n = static_cast<Eigen::Index>(dim);
  CMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double re = gauss(rng);
      g(i, j) = Complex(re, gauss(rng));
    }
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace iprqs
