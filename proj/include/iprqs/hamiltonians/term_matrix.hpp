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

#include "iprqs/core/linalg.hpp"
#include "iprqs/hamiltonians/hamiltonian.hpp"

namespace iprqs::detail {

/// Kronecker product of a term's factors over its own support (no coefficient).
inline CMatrix term_local_matrix(const HamiltonianTerm& term) {
  CMatrix m = CMatrix::Identity(1, 1);
  for (const auto& f : term.factors) m = kron(m, f.matrix);
  return m;
}

}  // namespace iprqs::detail
