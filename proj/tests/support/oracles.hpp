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

// Reference constructions that share no code with the library kernels:
// explicit Kronecker products, permutation matrices and textbook formulas.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  }
  return out;
}

inline Mat kron_all(const std::vector<Mat>& factors) {
  Mat out = Mat::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

inline std::size_t total(const std::vector<unsigned>& dims) {
  std::size_t n = 1;
  for (unsigned d : dims) n *= d;
  return n;
}

inline std::vector<unsigned> digits(std::size_t index, const std::vector<unsigned>& dims) {
  std::vector<unsigned> out(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    out[k] = static_cast<unsigned>(index % dims[k]);
    index /= dims[k];
  }
  return out;
}

inline std::size_t index(const std::vector<unsigned>& dig, const std::vector<unsigned>& dims) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) out = out * dims[k] + dig[k];
  return out;
}

/// Full matrix of a (controlled) operator `u` on `targets`, by enumerating basis
/// states. Controls are (site, value) pairs.
inline Mat embed(const Mat& u, const std::vector<std::size_t>& targets,
                 const std::vector<std::pair<std::size_t, unsigned>>& controls, const std::vector<unsigned>& dims) {
  const std::size_t n = total(dims);
  Mat out = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t col = 0; col < n; ++col) {
    const auto in = digits(col, dims);
    bool active = true;
    for (const auto& [site, value] : controls) active = active && in[site] == value;
    if (!active) {
      out(static_cast<Eigen::Index>(col), static_cast<Eigen::Index>(col)) = 1.0;
      continue;
    }
    std::vector<unsigned> tdims;
    for (std::size_t t : targets) tdims.push_back(dims[t]);
    std::vector<unsigned> local_in;
    for (std::size_t t : targets) local_in.push_back(in[t]);
    const std::size_t c = index(local_in, tdims);
    for (std::size_t r = 0; r < total(tdims); ++r) {
      const auto local_out = digits(r, tdims);
      auto o = in;
      for (std::size_t k = 0; k < targets.size(); ++k) o[targets[k]] = local_out[k];
      out(static_cast<Eigen::Index>(index(o, dims)), static_cast<Eigen::Index>(col)) +=
          u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

/// Permutation matrix of a basis-state map.
inline Mat basis_map(const std::vector<unsigned>& dims,
                     const std::function<std::vector<unsigned>(std::vector<unsigned>)>& f) {
  const std::size_t n = total(dims);
  Mat out = Mat::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t col = 0; col < n; ++col) {
    out(static_cast<Eigen::Index>(index(f(digits(col, dims)), dims)), static_cast<Eigen::Index>(col)) = 1.0;
  }
  return out;
}

/// Single-site operator at `site` in a chain of `dims`, via Kronecker identities.
inline Mat site_op(const Mat& op, std::size_t site, const std::vector<unsigned>& dims) {
  std::vector<Mat> f;
  for (std::size_t k = 0; k < dims.size(); ++k) f.push_back(k == site ? op : Mat::Identity(dims[k], dims[k]));
  return kron_all(f);
}

/// F_{k,x} = 2^{-m/2} exp(2 pi i x k / 2^m).
inline Mat dft(std::size_t m) {
  const auto n = static_cast<Eigen::Index>(std::size_t{1} << m);
  Mat f(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index x = 0; x < n; ++x) {
      f(k, x) = std::polar(1.0 / std::sqrt(static_cast<double>(n)),
                           2.0 * std::numbers::pi * static_cast<double>(x * k) / static_cast<double>(n));
    }
  }
  return f;
}

/// sum_i |c_i|^{2q}, written out with std::pow.
inline double ipr(const Vec& c, int q) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) s += std::pow(std::norm(c[i]), q);
  return s;
}

/// exp(-i H t) from a Taylor series with scaling and squaring.
inline Mat expm_taylor(const Mat& h, double t) {
  const Mat a = Complex(0.0, -t) * h;
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) > 0.5) ++squarings;
  const Mat b = a / std::ldexp(1.0, squarings);
  Mat term = Mat::Identity(h.rows(), h.cols());
  Mat sum = term;
  for (int k = 1; k < 30; ++k) {
    term = term * b / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

inline Vec random_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vec v(static_cast<Eigen::Index>(n));
  for (auto& x : v) {
    const double re = g(rng);
    x = Complex(re, g(rng));
  }
  return v.normalized();
}

inline Mat pauli_x() { Mat m(2, 2); m << 0, 1, 1, 0; return m; }
inline Mat pauli_z() { Mat m(2, 2); m << 1, 0, 0, -1; return m; }
inline Mat hadamard() { Mat m(2, 2); m << 1, 1, 1, -1; return m / std::sqrt(2.0); }
inline Mat proj0() { Mat m(2, 2); m << 1, 0, 0, 0; return m; }

}  // namespace oracle
