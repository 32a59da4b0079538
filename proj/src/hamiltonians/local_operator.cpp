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

#include "iprqs/hamiltonians/local_operator.hpp"

#include "iprqs/core/errors.hpp"
#include "iprqs/core/linalg.hpp"

namespace iprqs {
namespace ops {

CMatrix identity(Digit d) { return CMatrix::Identity(d, d); }

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMatrix pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMatrix projector0() {
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

CMatrix spin1_x() {
  const double r = 1.0 / std::sqrt(2.0);
  CMatrix m(3, 3);
  m << 0, r, 0, r, 0, r, 0, r, 0;
  return m;
}

CMatrix spin1_y() {
  const Complex r(0, 1.0 / std::sqrt(2.0));
  CMatrix m(3, 3);
  m << 0, -r, 0, r, 0, -r, 0, r, 0;
  return m;
}

CMatrix spin1_z() {
  CMatrix m = CMatrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

}  // namespace ops

LocalOperator local(Site site, CMatrix matrix, std::string label) {
  if (!is_hermitian(matrix, 1e-12)) throw Error(Errc::not_hermitian, label + " is not Hermitian");
  return LocalOperator{site, std::move(matrix), true, std::move(label)};
}

LocalOperator local_general(Site site, CMatrix matrix, std::string label) {
  return LocalOperator{site, std::move(matrix), false, std::move(label)};
}

}  // namespace iprqs
