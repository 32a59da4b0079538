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

#include "iprqs/hamiltonians/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"
#include "iprqs/core/linalg.hpp"
#include "iprqs/hamiltonians/term_matrix.hpp"

namespace iprqs {

std::vector<Site> HamiltonianTerm::support() const {
  std::vector<Site> s;
  for (const auto& f : factors) s.push_back(f.site);
  return s;
}

HamiltonianTerm make_term(double coefficient, std::vector<LocalOperator> factors) {
  std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.site < b.site; });
  for (std::size_t k = 1; k < factors.size(); ++k) {
    if (factors[k].site == factors[k - 1].site) {
      throw Error(Errc::unsupported_term, "term has two factors on site " + std::to_string(factors[k].site));
    }
  }
  return HamiltonianTerm{coefficient, std::move(factors)};
}

void HamiltonianSpec::validate() const {
  for (const auto& term : terms) {
    for (std::size_t k = 0; k < term.factors.size(); ++k) {
      const auto& f = term.factors[k];
      if (f.site >= site_register.size()) throw Error(Errc::gate_shape, label + ": factor site out of range");
      if (k > 0 && term.factors[k - 1].site >= f.site) {
        throw Error(Errc::gate_shape, label + ": factor sites not strictly increasing");
      }
      const auto d = static_cast<Eigen::Index>(site_register.dim(f.site));
      if (f.matrix.rows() != d || f.matrix.cols() != d) {
        throw Error(Errc::gate_shape, label + ": factor " + f.label + " does not match local dimension");
      }
    }
  }
}

HamiltonianSpec build_oat(std::size_t sites, double coupling) {
  if (sites < 2) throw Error(Errc::domain, "OAT needs at least two sites");
  HamiltonianSpec spec{SiteRegister::uniform(sites, 2), {}, "OAT"};
  for (Site i = 0; i < sites; ++i) {
    for (Site j = i + 1; j < sites; ++j) {
      spec.terms.push_back(make_term(2.0 * coupling, {local(i, ops::pauli_z(), "Z"), local(j, ops::pauli_z(), "Z")}));
    }
  }
  // Z_i Z_i = 1: the diagonal of the double sum is a global phase.
  spec.terms.push_back(make_term(coupling * static_cast<double>(sites), {}));
  return spec;
}

HamiltonianSpec build_pxp(std::size_t sites, double h, bool periodic) {
  if (periodic && sites < 3) throw Error(Errc::domain, "periodic PXP needs at least 3 sites");
  if (sites < 2) throw Error(Errc::domain, "PXP needs at least 2 sites");
  HamiltonianSpec spec{SiteRegister::uniform(sites, 2), {}, "PXP"};
  const auto n = static_cast<long>(sites);
  for (long i = 0; i < n; ++i) {
    std::vector<LocalOperator> f{local(static_cast<Site>(i), ops::pauli_x(), "X")};
    for (long nb : {i - 1, i + 1}) {
      if (nb < 0 || nb >= n) {
        if (!periodic) continue;
        nb = (nb + n) % n;
      }
      f.push_back(local(static_cast<Site>(nb), ops::projector0(), "P"));
    }
    spec.terms.push_back(make_term(1.0, std::move(f)));
  }
  for (Site i = 0; i < sites; ++i) spec.terms.push_back(make_term(-h, {local(i, ops::pauli_z(), "Z")}));
  return spec;
}

HamiltonianSpec build_aklt(std::size_t sites, double h) {
  if (sites < 2) throw Error(Errc::domain, "AKLT needs at least two sites");
  HamiltonianSpec spec{SiteRegister::uniform(sites, 3), {}, "AKLT"};
  const std::array<CMatrix, 3> s{ops::spin1_x(), ops::spin1_y(), ops::spin1_z()};
  const std::array<const char*, 3> name{"Sx", "Sy", "Sz"};
  for (Site i = 0; i + 1 < sites; ++i) {
    for (std::size_t a = 0; a < 3; ++a) {
      spec.terms.push_back(make_term(0.5, {local(i, s[a], name[a]), local(i + 1, s[a], name[a])}));
    }
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        const CMatrix ab = s[a] * s[b];
        const std::string lbl = std::string(name[a]) + name[b];
        spec.terms.push_back(make_term(1.0 / 6.0, {local_general(i, ab, lbl), local_general(i + 1, ab, lbl)}));
      }
    }
    spec.terms.push_back(make_term(1.0 / 3.0, {}));
  }
  const double field = -h / static_cast<double>(sites);
  for (Site i = 0; i < sites; ++i) spec.terms.push_back(make_term(field, {local(i, ops::spin1_z(), "Sz")}));
  return spec;
}

CMatrix dense_matrix(const HamiltonianSpec& spec, Index cap) {
  spec.validate();
  const SiteRegister& reg = spec.site_register;
  const Index n = reg.total_dim();
  if (n > cap) {
    throw Error(Errc::size_cap, spec.label + ": dimension " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(cap));
  }
  CMatrix h = CMatrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (const auto& term : spec.terms) {
    const std::vector<Site> support = term.support();
    const CMatrix local_m = term.coefficient * detail::term_local_matrix(term);
    const std::vector<Index> offsets = detail::target_offsets(reg, support);
    for (Index b : detail::gate_bases(reg, support, {})) {
      for (Index r = 0; r < offsets.size(); ++r) {
        for (Index c = 0; c < offsets.size(); ++c) {
          h(static_cast<Eigen::Index>(b + offsets[r]), static_cast<Eigen::Index>(b + offsets[c])) +=
              local_m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
      }
    }
  }
  if (!is_hermitian(h, 1e-12)) throw Error(Errc::not_hermitian, spec.label + ": assembled matrix is not Hermitian");
  return h;
}

CMatrix site_operator(const SiteRegister& reg, Site site, const CMatrix& op) {
  HamiltonianSpec spec{reg, {make_term(1.0, {LocalOperator{site, op, true, "op"}})}, "site-operator"};
  return dense_matrix(spec, reg.total_dim());
}

}  // namespace iprqs
