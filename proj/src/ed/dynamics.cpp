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

#include "iprqs/ed/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "iprqs/core/errors.hpp"
#include "iprqs/ed/ipr.hpp"

namespace iprqs {

double survival_average_numeric(const CVector& state, const Spectrum& spectrum, double t_max,
                                std::uint64_t n_samples) {
  if (!(t_max > 0.0)) throw Error(Errc::domain, "t_max must be positive");
  if (n_samples == 0) throw Error(Errc::domain, "n_samples must be positive");
  const RVector w = eigen_coefficients(state, spectrum).cwiseAbs2();
  const Eigen::Index n = w.size();
  const double dt = t_max / static_cast<double>(n_samples);
  CVector step(n), phase(n);
  for (Eigen::Index i = 0; i < n; ++i) step[i] = std::polar(1.0, -spectrum.eigenvalues[i] * dt);
  // The phase recurrence is re-anchored periodically to bound round-off.
  constexpr std::uint64_t kAnchorEvery = 1024;
  double acc = 0.0;
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    if (k % kAnchorEvery == 0) {
      const double t = (static_cast<double>(k) + 0.5) * dt;
      for (Eigen::Index i = 0; i < n; ++i) phase[i] = std::polar(1.0, -spectrum.eigenvalues[i] * t);
    } else {
      phase.array() *= step.array();
    }
    Complex amp = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) amp += w[i] * phase[i];
    acc += std::norm(amp);
  }
  return acc / static_cast<double>(n_samples);
}

double survival_average_numeric(const CVector& state, const CMatrix& h, double t_max, std::uint64_t n_samples) {
  return survival_average_numeric(state, eigendecompose(h), t_max, n_samples);
}

namespace {

struct Canonical {
  double energy;
  double observable;
};

Canonical canonical(const RVector& eps, const RVector& obs_diag, double beta) {
  const double shift = beta >= 0.0 ? eps.minCoeff() : eps.maxCoeff();
  double z = 0.0, e = 0.0, o = 0.0;
  for (Eigen::Index i = 0; i < eps.size(); ++i) {
    const double b = std::exp(-beta * (eps[i] - shift));
    z += b;
    e += b * eps[i];
    o += b * obs_diag[i];
  }
  return {e / z, o / z};
}

}  // namespace

Thermalization thermalization(const Spectrum& spectrum, const CMatrix& observable, const CVector& state) {
  const Eigen::Index n = static_cast<Eigen::Index>(spectrum.dim());
  if (observable.rows() != n || observable.cols() != n) {
    throw Error(Errc::dimension_mismatch, "observable does not match spectrum dimension");
  }
  const CVector c = eigen_coefficients(state, spectrum);
  if (std::abs(c.squaredNorm() - 1.0) > kDriftTolerance) {
    throw Error(Errc::not_normalized, "thermalization: state is not normalized");
  }
  const CMatrix o_eig = spectrum.eigenvectors.adjoint() * observable * spectrum.eigenvectors;

  Thermalization out;
  for (const auto& g : spectrum.groups) {
    for (Index a : g) {
      for (Index b : g) {
        const auto ia = static_cast<Eigen::Index>(a), ib = static_cast<Eigen::Index>(b);
        out.long_time += (std::conj(c[ia]) * o_eig(ia, ib) * c[ib]).real();
      }
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) out.energy += std::norm(c[i]) * spectrum.eigenvalues[i];

  const RVector obs_diag = o_eig.diagonal().real();
  if (spectrum.norm == 0.0) {
    out.thermal = canonical(spectrum.eigenvalues, obs_diag, 0.0).observable;
    return out;
  }
  const double beta_max = 100.0 / spectrum.norm;
  double lo = -beta_max, hi = beta_max;  // energy decreases with beta
  const double e_lo = canonical(spectrum.eigenvalues, obs_diag, lo).energy;
  const double e_hi = canonical(spectrum.eigenvalues, obs_diag, hi).energy;
  if (out.energy > e_lo || out.energy < e_hi) {
    throw Error(Errc::thermal_match, "initial energy is outside the canonical range for |beta| <= 100/|H|");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * beta_max; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (canonical(spectrum.eigenvalues, obs_diag, mid).energy > out.energy) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  out.beta = 0.5 * (lo + hi);
  out.thermal = canonical(spectrum.eigenvalues, obs_diag, out.beta).observable;
  return out;
}

CMatrix z_operator(Digit dim) {
  CMatrix z = CMatrix::Zero(dim, dim);
  if (dim == 2) {
    z(0, 0) = 1.0;
    z(1, 1) = -1.0;
    return z;
  }
  const double s = 0.5 * static_cast<double>(dim - 1);
  for (Digit k = 0; k < dim; ++k) z(k, k) = s - static_cast<double>(k);
  return z;
}

std::vector<Index> dynamical_sector(const CMatrix& h, const CVector& state) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n || state.size() != n) throw Error(Errc::dimension_mismatch, "dynamical_sector: shape mismatch");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Eigen::Index> stack;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (state[i] != Complex(0.0)) {
      seen[static_cast<std::size_t>(i)] = 1;
      stack.push_back(i);
    }
  }
  while (!stack.empty()) {
    const Eigen::Index c = stack.back();
    stack.pop_back();
    for (Eigen::Index r = 0; r < n; ++r) {
      if (!seen[static_cast<std::size_t>(r)] && std::abs(h(r, c)) > 0.0) {
        seen[static_cast<std::size_t>(r)] = 1;
        stack.push_back(r);
      }
    }
  }
  std::vector<Index> out;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) out.push_back(static_cast<Index>(i));
  }
  return out;
}

Thermalization delta_sigma_z(const HamiltonianSpec& spec, Site site, const CVector& state) {
  const SiteRegister& reg = spec.site_register;
  const std::vector<Site> sites{site};
  reg.check_sites(sites, "delta_sigma_z");
  const CMatrix h = dense_matrix(spec);
  const CMatrix z = site_operator(reg, site, z_operator(reg.dim(site)));
  const std::vector<Index> sector = dynamical_sector(h, state);
  const auto k = static_cast<Eigen::Index>(sector.size());
  CMatrix hs(k, k), zs(k, k);
  CVector ps(k);
  for (Eigen::Index a = 0; a < k; ++a) {
    const auto ia = static_cast<Eigen::Index>(sector[static_cast<std::size_t>(a)]);
    ps[a] = state[ia];
    for (Eigen::Index b = 0; b < k; ++b) {
      const auto ib = static_cast<Eigen::Index>(sector[static_cast<std::size_t>(b)]);
      hs(a, b) = h(ia, ib);
      zs(a, b) = z(ia, ib);
    }
  }
  return thermalization(eigendecompose(hs), zs, ps);
}

}  // namespace iprqs
