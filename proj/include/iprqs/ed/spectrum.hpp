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

#include <optional>
#include <random>
#include <vector>

#include "iprqs/core/types.hpp"

namespace iprqs {

struct Spectrum {
  RVector eigenvalues;  // ascending
  CMatrix eigenvectors;  // columns
  std::vector<std::vector<Index>> groups;
  double deg_tol = 0.0;
  double norm = 0.0;  // largest |eigenvalue|

  Index dim() const { return static_cast<Index>(eigenvalues.size()); }
  bool degenerate() const;
  /// eps_max - eps_min.
  double spread() const;
  /// Mean eigenvalue of each degeneracy group.
  std::vector<double> group_energies() const;
};

inline constexpr double kRelativeDegTol = 1e-8;

/// Throws Errc::not_hermitian unless H is Hermitian within 1e-10. Consecutive
/// eigenvalues closer than deg_tol (default 1e-8 * norm) share a group.
Spectrum eigendecompose(const CMatrix& h, std::optional<double> deg_tol = std::nullopt);

/// Smallest gap between consecutive groups. Throws Errc::no_gap for a single group.
double min_gap(const Spectrum& spectrum);

struct GroundState {
  CVector state;
  double energy = 0.0;
  Index degeneracy = 1;
  /// Basis index the degenerate tie-break projected from.
  Index anchor = 0;
};

/// Lowest group. For a degenerate ground level the representative is the
/// projection of the basis state with the largest weight in that level
/// (lowest index on ties), normalized so that entry is real and positive.
GroundState ground_state(const Spectrum& spectrum);

/// (G + G^dagger) / 2 with G complex Gaussian of unit variance per entry.
CMatrix random_hermitian(Index dim, std::mt19937_64& rng);

}  // namespace iprqs
