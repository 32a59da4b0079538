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

#include <Eigen/Eigenvalues>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/types.hpp"

namespace iprqs {

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m, double tol = kHermitianTolerance) {
  return hermiticity_defect(m) <= tol;
}

/// exp(-i H t) for Hermitian H through its eigendecomposition.
template <typename Derived>
CMatrixT<typename Eigen::NumTraits<typename Derived::Scalar>::Real> hermitian_expm(
    const Eigen::MatrixBase<Derived>& h, double t) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using Mat = CMatrixT<Real>;
  if (!is_hermitian(h)) throw Error(Errc::not_hermitian, "generator is not Hermitian");
  const Mat hc = h.template cast<std::complex<Real>>();
  Eigen::SelfAdjointEigenSolver<Mat> es(hc);
  const auto& w = es.eigenvalues();
  CVectorT<Real> phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases[i] = std::polar(Real(1), -w[i] * Real(t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

/// Largest |eigenvalue| of a Hermitian matrix.
template <typename Derived>
double spectral_norm_hermitian(const Eigen::MatrixBase<Derived>& h) {
  if (h.size() == 0) return 0.0;
  const CMatrix hc = h.template cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hc, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

/// Largest singular value.
template <typename Derived>
double operator_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<CMatrix> svd(m.template cast<Complex>());
  return svd.singularValues()(0);
}

template <typename A, typename B>
CMatrix kron(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = Complex(a(i, j)) * b.template cast<Complex>();
    }
  }
  return out;
}

}  // namespace iprqs
