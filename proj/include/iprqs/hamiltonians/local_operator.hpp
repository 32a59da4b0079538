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

#include "iprqs/core/types.hpp"

namespace iprqs {

/// Single-site factor of a Hamiltonian term.
struct LocalOperator {
  Site site = 0;
  CMatrix matrix;
  bool hermitian = true;
  std::string label;
};

namespace ops {

CMatrix identity(Digit d);
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
/// |0><0|
CMatrix projector0();
// Spin-1 matrices in the S^z basis ordered m = +1, 0, -1 (digit 0 is m = +1).
CMatrix spin1_x();
CMatrix spin1_y();
CMatrix spin1_z();

}  // namespace ops

LocalOperator local(Site site, CMatrix matrix, std::string label);

/// Product factor that is not Hermitian on its own (e.g. S^a S^b with a != b).
LocalOperator local_general(Site site, CMatrix matrix, std::string label);

}  // namespace iprqs
