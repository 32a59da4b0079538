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

#include <cmath>
#include <random>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/qudit_state.hpp"
#include "iprqs/ed/ipr.hpp"
#include "oracles.hpp"

namespace iprqs {
namespace {

CMatrix diag(std::initializer_list<double> v) {
  RVector d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) d[i++] = x;
  return d.cast<Complex>().asDiagonal();
}

TEST(IprDirect, BasisStateIsOne) {
  const QuditState s = basis_state(SiteRegister({2, 3, 2}), {1, 2, 0});
  for (int q = 2; q <= 5; ++q) EXPECT_DOUBLE_EQ(ipr_direct(s.amplitudes(), q).value, 1.0);
}

TEST(IprDirect, Ghz) {
  for (std::size_t l : {2u, 3u, 5u}) {
    const QuditState g = ghz_state(SiteRegister::uniform(l, 2));
    for (int q = 2; q <= 4; ++q) EXPECT_NEAR(ipr_direct(g.amplitudes(), q).value, std::pow(2.0, 1 - q), 1e-15);
  }
}

TEST(IprDirect, ProductState) {
  for (double theta : {0.3, 0.7, 1.1}) {
    for (std::size_t l : {2u, 4u, 6u}) {
      for (int q = 2; q <= 4; ++q) {
        const double want = std::pow(std::pow(std::cos(theta), 2 * q) + std::pow(std::sin(theta), 2 * q), l);
        EXPECT_NEAR(ipr_direct(product_state(l, theta).amplitudes(), q).value, want, 1e-12);
      }
    }
  }
}

TEST(IprDirect, UniformVector) {
  const Eigen::Index n = 24;
  const CVector u = CVector::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (int q = 2; q <= 4; ++q) EXPECT_NEAR(ipr_direct(u, q).value, std::pow(double(n), 1 - q), 1e-15);
}

TEST(IprDirect, Errors) {
  const CVector bad = CVector::Constant(4, 0.6);
  try {
    (void)ipr_direct(bad, 2);
    FAIL() << "expected not_normalized";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_normalized);
  }
  const CVector ok = CVector::Constant(4, 0.5);
  EXPECT_THROW((void)ipr_direct(ok, 1), Error);
}

TEST(IprDirect, RangeAndMonotoneInQ) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 30;
    const CVector c = oracle::random_vector(n, rng);
    double prev = 2.0;
    for (int q = 2; q <= 6; ++q) {
      const IprReport r = ipr_direct(c, q);
      EXPECT_GE(r.value, std::pow(double(n), 1 - q) - 1e-12);
      EXPECT_LE(r.value, 1.0 + 1e-12);
      EXPECT_LE(r.value, prev);
      EXPECT_NEAR(r.entropy, std::log2(r.value) / (1 - q), 1e-12);
      EXPECT_NEAR(r.value, oracle::ipr(c, q), 1e-14);
      prev = r.value;
    }
  }
}

TEST(ParticipationEntropy, Examples) {
  EXPECT_DOUBLE_EQ(participation_entropy(1.0, 2), 0.0);
  EXPECT_DOUBLE_EQ(participation_entropy(0.5, 2), 1.0);
  EXPECT_NEAR(participation_entropy(std::pow(16.0, -2.0), 3), 4.0, 1e-14);
  try {
    (void)participation_entropy(0.0, 2);
    FAIL() << "expected domain";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::domain);
  }
  EXPECT_THROW((void)participation_entropy(-0.1, 2), Error);
}

TEST(IprEigenbasis, EigenvectorIsOne) {
  std::mt19937_64 rng(4);
  const Spectrum s = eigendecompose(random_hermitian(8, rng));
  for (Eigen::Index i = 0; i < 8; ++i) {
    EXPECT_NEAR(ipr_in_eigenbasis(s.eigenvectors.col(i), s, 2).value, 1.0, 1e-12);
  }
}

TEST(IprEigenbasis, PlusStateUnderZ) {
  const Spectrum s = eigendecompose(oracle::pauli_z());
  const CVector plus = CVector::Constant(2, 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(ipr_in_eigenbasis(plus, s, 2).value, 0.5, 1e-15);
  EXPECT_NEAR(ipr_in_eigenbasis(plus, s, 3).value, 0.25, 1e-15);
}

TEST(IprDegenerate, StateInsideSubspaceIsOne) {
  const Spectrum s = eigendecompose(diag({0, 0, 0, 1, 2}));
  const CVector v = (CVector(5) << 0.6, Complex(0, 0.48), 0.64, 0, 0).finished();
  EXPECT_NEAR(ipr_degenerate(v, s, 2).value, 1.0, 1e-12);
  EXPECT_NEAR(ipr_in_eigenbasis(v, s, 2).value, 1.0, 1e-12);
}

TEST(IprDegenerate, ReducesToEigenbasisWithoutDegeneracy) {
  std::mt19937_64 rng(6);
  const Spectrum s = eigendecompose(random_hermitian(10, rng));
  ASSERT_FALSE(s.degenerate());
  for (int trial = 0; trial < 10; ++trial) {
    const CVector c = oracle::random_vector(10, rng);
    for (int q = 2; q <= 4; ++q) {
      const double a = ipr_degenerate(c, s, q).value;
      const double b = oracle::ipr(s.eigenvectors.adjoint() * c, q);
      EXPECT_NEAR(a, b, 1e-13);
      EXPECT_NEAR(ipr_in_eigenbasis(c, s, q).value, b, 1e-13);
    }
  }
}

TEST(IprDegenerate, HandComputedExample) {
  const Spectrum s = eigendecompose(diag({0, 0, 1}));
  const CVector c = (CVector(3) << 1.0 / std::sqrt(2.0), 0.5, 0.5).finished();
  const RVector p = group_weights(c, s);
  EXPECT_NEAR(p[0], 0.75, 1e-15);
  EXPECT_NEAR(p[1], 0.25, 1e-15);
  EXPECT_NEAR(ipr_degenerate(c, s, 2).value, 10.0 / 16.0, 1e-15);
}

TEST(IprDegenerate, IndependentOfBasisInsideLevel) {
  // A rotated basis inside the degenerate level must not change the value.
  std::mt19937_64 rng(8);
  const CMatrix h = diag({-1, -1, -1, 0.5, 2});
  const CVector c = oracle::random_vector(5, rng);
  const double want = ipr_degenerate(c, eigendecompose(h), 2).value;
  CMatrix g(5, 5);
  for (int k = 0; k < 5; ++k) g.col(k) = oracle::random_vector(5, rng);
  const CMatrix u = Eigen::HouseholderQR<CMatrix>(g).householderQ();
  const Spectrum rotated = eigendecompose(u * h * u.adjoint());
  EXPECT_NEAR(ipr_degenerate(u * c, rotated, 2).value, want, 1e-12);
}

TEST(GroupWeights, RejectsWrongDimension) {
  const Spectrum s = eigendecompose(diag({0, 1}));
  try {
    (void)group_weights(CVector::Ones(3) / std::sqrt(3.0), s);
    FAIL() << "expected dimension_mismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::dimension_mismatch);
  }
}

}  // namespace
}  // namespace iprqs
