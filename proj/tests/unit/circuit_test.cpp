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

#include <gtest/gtest.h>

#include <memory>
#include <random>

#include "iprqs/core/circuit.hpp"
#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"
#include "oracles.hpp"

namespace iprqs {
namespace {

CMatrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  CMatrix g(n, n);
  for (Eigen::Index c = 0; c < n; ++c) g.col(c) = oracle::random_vector(static_cast<std::size_t>(n), rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  return qr.householderQ();
}

TEST(CircuitPlan, ValidateRejectsOutOfRangeGate) {
  CircuitPlan plan{SiteRegister({2, 2}), {}, {0}, {0}, {}};
  plan.add(hadamard(3));
  EXPECT_THROW(plan.validate(), Error);
}

TEST(CircuitPlan, GateCountExpandsRepeats) {
  CircuitPlan plan{SiteRegister({2, 2, 2}), {}, {}, {}, {}};
  plan.add(hadamard(0));
  auto body = std::make_shared<const std::vector<GateOp>>(std::vector<GateOp>{pauli_x(1), hadamard(2)});
  plan.add(ControlledRepeat{{{0, 1}}, body, 4, "U^4"});
  EXPECT_EQ(gate_count(plan), 9u);
  EXPECT_EQ(gate_count(plan, "H"), 5u);
}

TEST(Fuse, MatchesProductOfEmbeddings) {
  std::mt19937_64 rng(1);
  const SiteRegister reg({2, 3, 2, 3});
  const std::vector<GateOp> gates{dense_gate({3, 1}, random_unitary(9, rng)), sum_d(1, 3),
                                  controlled(dense_gate({1}, random_unitary(3, rng)), {{3, 2}})};
  const FusedBlock f = fuse(gates, reg);
  EXPECT_EQ(f.support, (std::vector<Site>{1, 3}));
  // Oracle: product of the explicit two-site matrices.
  const std::vector<unsigned> dims{3, 3};
  oracle::Mat ref = oracle::Mat::Identity(9, 9);
  ref = oracle::embed(std::get<DenseAction>(gates[0].action).unitary, {1, 0}, {}, dims) * ref;
  ref = oracle::basis_map(dims, [](std::vector<unsigned> d) {
          d[1] = (d[1] + d[0]) % 3;
          return d;
        }) * ref;
  ref = oracle::embed(std::get<DenseAction>(gates[2].action).unitary, {0}, {{1, 2}}, dims) * ref;
  EXPECT_LE((f.unitary - ref).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Execute, FusedRepeatEqualsLiteralRepeat) {
  std::mt19937_64 rng(2);
  const SiteRegister reg({2, 2, 3, 2});
  auto body = std::make_shared<const std::vector<GateOp>>(
      std::vector<GateOp>{dense_gate({2, 3}, random_unitary(6, rng)), cnot(3, 1), phase_shift(1, 0.4)});
  CircuitPlan plan{reg, {}, {}, {}, {}};
  plan.add(hadamard(0));
  plan.add(ControlledRepeat{{{0, 1}}, body, 13, "U^13"});

  const QuditState in = random_state(reg, rng);
  QuditState fused = in;
  execute(plan, fused);
  QuditState literal = in;
  execute(plan, literal, ExecutionOptions{.fuse_cap = 1});

  QuditState ref = apply_gate(in, hadamard(0));
  for (int r = 0; r < 13; ++r) {
    for (const auto& g : *body) ref = apply_gate(ref, controlled(g, {{0, 1}}));
  }
  EXPECT_LE((fused.amplitudes() - ref.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((literal.amplitudes() - ref.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Execute, SparseAndDenseAgree) {
  std::mt19937_64 rng(3);
  const SiteRegister reg({2, 2, 2, 2});
  auto body = std::make_shared<const std::vector<GateOp>>(std::vector<GateOp>{dense_gate({1, 2}, random_unitary(4, rng))});
  CircuitPlan plan{reg, {}, {}, {}, {}};
  plan.add(hadamard(0));
  plan.add(ControlledRepeat{{{0, 1}}, body, 5, "U^5"});
  plan.append(qft_gates({0, 3}));
  QuditState d = random_state(reg, rng);
  SparseState s = SparseState::from_dense(d);
  execute(plan, d);
  execute(plan, s);
  EXPECT_LE((s.to_dense().amplitudes() - d.amplitudes()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CircuitUnitary, QftPlanIsDft) {
  CircuitPlan plan{SiteRegister::uniform(3, 2), {}, {}, {}, {}};
  plan.append(qft_gates({0, 1, 2}));
  EXPECT_LE((circuit_unitary(plan) - oracle::dft(3)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(MatrixPower, BySquaring) {
  std::mt19937_64 rng(4);
  const CMatrix u = random_unitary(5, rng);
  CMatrix ref = CMatrix::Identity(5, 5);
  for (int k = 0; k < 11; ++k) ref = ref * u;
  EXPECT_LE((matrix_power(u, 11) - ref).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_EQ(matrix_power(u, 0), CMatrix::Identity(5, 5));
}

TEST(Execute, RegisterMismatchRejected) {
  CircuitPlan plan{SiteRegister({2, 2}), {}, {}, {}, {}};
  QuditState s = basis_state(SiteRegister({2, 3}), {0, 0});
  EXPECT_THROW(execute(plan, s), Error);
}

}  // namespace
}  // namespace iprqs
