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

#include "iprqs/core/gate.hpp"

#include <algorithm>
#include <set>

#include "iprqs/core/errors.hpp"

namespace iprqs {
namespace {

std::vector<Digit> target_dims(const GateOp& g, const SiteRegister& reg) {
  std::vector<Digit> dims;
  dims.reserve(g.targets.size());
  for (Site s : g.targets) dims.push_back(reg.dim(s));
  return dims;
}

}  // namespace

void GateOp::validate(const SiteRegister& reg) const {
  if (targets.empty()) throw Error(Errc::gate_shape, name + ": no target sites");
  reg.check_sites(targets, name);
  std::set<Site> seen(targets.begin(), targets.end());
  if (seen.size() != targets.size()) throw Error(Errc::gate_shape, name + ": repeated target site");
  for (const Control& c : controls) {
    reg.check_sites(std::span<const Site>(&c.site, 1), name);
    if (!seen.insert(c.site).second) throw Error(Errc::gate_shape, name + ": control overlaps another site");
    if (c.value >= reg.dim(c.site)) throw Error(Errc::gate_shape, name + ": control value out of range");
  }
  const Index local = reg.subspace_dim(targets);
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, DenseAction>) {
          if (static_cast<Index>(a.unitary.rows()) != local || static_cast<Index>(a.unitary.cols()) != local) {
            throw Error(Errc::gate_shape, name + ": unitary is " + std::to_string(a.unitary.rows()) + "x" +
                                              std::to_string(a.unitary.cols()) + ", targets span " +
                                              std::to_string(local));
          }
        } else if constexpr (std::is_same_v<A, SitePermutation>) {
          if (a.source.size() != targets.size()) throw Error(Errc::gate_shape, name + ": permutation arity");
          for (std::size_t k = 0; k < a.source.size(); ++k) {
            if (a.source[k] >= targets.size() || reg.dim(targets[k]) != reg.dim(targets[a.source[k]])) {
              throw Error(Errc::gate_shape, name + ": permutation moves digits between unequal dimensions");
            }
          }
        } else {
          if (targets.size() != 2 || reg.dim(targets[0]) != reg.dim(targets[1])) {
            throw Error(Errc::gate_shape, name + ": modular add needs two sites of equal dimension");
          }
        }
      },
      action);
}

GateOp dense_gate(std::vector<Site> targets, CMatrix u, std::string name) {
  if (u.rows() != u.cols()) throw Error(Errc::gate_shape, name + ": unitary is not square");
  if (!is_unitary(u)) throw Error(Errc::gate_shape, name + ": matrix is not unitary");
  return GateOp{std::move(targets), {}, DenseAction{std::move(u)}, std::move(name)};
}

GateOp hadamard(Site s) {
  CMatrix h(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  h << r, r, r, -r;
  return GateOp{{s}, {}, DenseAction{std::move(h)}, "H"};
}

GateOp pauli_x(Site s) {
  CMatrix x(2, 2);
  x << 0, 1, 1, 0;
  return GateOp{{s}, {}, DenseAction{std::move(x)}, "X"};
}

GateOp phase_shift(Site s, double phi) {
  CMatrix p = CMatrix::Identity(2, 2);
  p(1, 1) = std::polar(1.0, phi);
  return GateOp{{s}, {}, DenseAction{std::move(p)}, "P"};
}

GateOp cnot(Site control, Site target) {
  GateOp g = pauli_x(target);
  g.controls.push_back({control, 1});
  g.name = "CNOT";
  return g;
}

GateOp sum_d(Site control, Site target) { return GateOp{{control, target}, {}, ModularAdd{}, "SUM"}; }

GateOp swap(Site a, Site b) { return GateOp{{a, b}, {}, SitePermutation{{1, 0}}, "SWAP"}; }

GateOp controlled(GateOp gate, std::vector<Control> controls) {
  gate.controls.insert(gate.controls.end(), controls.begin(), controls.end());
  return gate;
}

GateOp controlled_block_cycle(Site control, const std::vector<std::vector<Site>>& blocks) {
  if (blocks.size() < 2) throw Error(Errc::block_shape, "block cycle needs at least two blocks");
  const std::size_t n = blocks.front().size();
  if (n == 0) throw Error(Errc::block_shape, "empty block");
  std::vector<Site> targets;
  std::set<Site> seen{control};
  for (const auto& b : blocks) {
    if (b.size() != n) throw Error(Errc::block_shape, "blocks differ in length");
    for (Site s : b) {
      if (!seen.insert(s).second) throw Error(Errc::block_shape, "blocks overlap each other or the control");
      targets.push_back(s);
    }
  }
  const std::size_t q = blocks.size();
  std::vector<std::size_t> source(targets.size());
  for (std::size_t k = 0; k < q; ++k) {
    for (std::size_t i = 0; i < n; ++i) source[k * n + i] = ((k + q - 1) % q) * n + i;
  }
  return GateOp{std::move(targets), {{control, 1}}, SitePermutation{std::move(source)}, "C-Pi" + std::to_string(q)};
}

std::vector<GateOp> qft_gates(const std::vector<Site>& sites) {
  std::vector<GateOp> out;
  const std::size_t m = sites.size();
  for (std::size_t j = 0; j < m; ++j) {
    out.push_back(hadamard(sites[j]));
    for (std::size_t k = j + 1; k < m; ++k) {
      GateOp cp = phase_shift(sites[j], 2.0 * kPi / std::ldexp(1.0, static_cast<int>(k - j + 1)));
      cp.controls.push_back({sites[k], 1});
      cp.name = "CP";
      out.push_back(std::move(cp));
    }
  }
  for (std::size_t j = 0; j < m / 2; ++j) out.push_back(swap(sites[j], sites[m - 1 - j]));
  return out;
}

GateOp adjoint(const GateOp& gate) {
  GateOp out = gate;
  out.name = gate.name + "^dag";
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, DenseAction>) {
          out.action = DenseAction{a.unitary.adjoint()};
        } else if constexpr (std::is_same_v<A, SitePermutation>) {
          std::vector<std::size_t> inv(a.source.size());
          for (std::size_t k = 0; k < a.source.size(); ++k) inv[a.source[k]] = k;
          out.action = SitePermutation{std::move(inv)};
        } else {
          out.action = ModularAdd{!a.subtract};
        }
      },
      gate.action);
  return out;
}

std::vector<Index> local_permutation(const GateOp& gate, const SiteRegister& reg) {
  const std::vector<Digit> dims = target_dims(gate, reg);
  const SiteRegister local(dims);
  std::vector<Index> perm(local.total_dim());
  std::vector<Digit> out(dims.size());
  for (Index r = 0; r < local.total_dim(); ++r) {
    const std::vector<Digit> in = local.digits_of(r);
    if (const auto* p = std::get_if<SitePermutation>(&gate.action)) {
      for (std::size_t k = 0; k < in.size(); ++k) out[k] = in[p->source[k]];
    } else if (const auto* m = std::get_if<ModularAdd>(&gate.action)) {
      const Digit d = dims[1];
      out[0] = in[0];
      out[1] = m->subtract ? (in[1] + d - in[0]) % d : (in[1] + in[0]) % d;
    } else {
      throw Error(Errc::gate_shape, gate.name + ": dense gate has no permutation form");
    }
    perm[r] = local.index_of(out);
  }
  return perm;
}

CMatrix local_matrix(const GateOp& gate, const SiteRegister& reg) {
  if (const auto* d = std::get_if<DenseAction>(&gate.action)) return d->unitary;
  const std::vector<Index> perm = local_permutation(gate, reg);
  const auto n = static_cast<Eigen::Index>(perm.size());
  CMatrix m = CMatrix::Zero(n, n);
  for (Eigen::Index r = 0; r < n; ++r) m(static_cast<Eigen::Index>(perm[static_cast<Index>(r)]), r) = 1.0;
  return m;
}

}  // namespace iprqs
