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

#include "iprqs/core/kernels.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "iprqs/core/errors.hpp"

namespace iprqs {
namespace detail {

std::vector<Index> target_offsets(const SiteRegister& reg, std::span<const Site> targets) {
  std::vector<Index> offsets{0};
  for (Site s : targets) {
    std::vector<Index> next;
    next.reserve(offsets.size() * reg.dim(s));
    for (Index o : offsets) {
      for (Digit v = 0; v < reg.dim(s); ++v) next.push_back(o + v * reg.stride(s));
    }
    offsets = std::move(next);
  }
  return offsets;
}

std::vector<Index> gate_bases(const SiteRegister& reg, std::span<const Site> targets,
                              std::span<const Control> controls) {
  std::vector<bool> fixed(reg.size(), false);
  Index base0 = 0;
  for (Site s : targets) fixed[s] = true;
  for (const Control& c : controls) {
    fixed[c.site] = true;
    base0 += c.value * reg.stride(c.site);
  }
  std::vector<Index> bases{base0};
  for (Site s = 0; s < reg.size(); ++s) {
    if (fixed[s]) continue;
    std::vector<Index> next;
    next.reserve(bases.size() * reg.dim(s));
    for (Index b : bases) {
      for (Digit v = 0; v < reg.dim(s); ++v) next.push_back(b + v * reg.stride(s));
    }
    bases = std::move(next);
  }
  return bases;
}

}  // namespace detail

namespace {

void apply_dense(CVector& a, const std::vector<Index>& bases, const std::vector<Index>& offsets, const CMatrix& u) {
  const auto dim = static_cast<Eigen::Index>(offsets.size());
  if (dim == 2) {
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const Index o1 = offsets[1];
    for (Index b : bases) {
      const Complex x0 = a[static_cast<Eigen::Index>(b)];
      const Complex x1 = a[static_cast<Eigen::Index>(b + o1)];
      a[static_cast<Eigen::Index>(b)] = u00 * x0 + u01 * x1;
      a[static_cast<Eigen::Index>(b + o1)] = u10 * x0 + u11 * x1;
    }
    return;
  }
  const auto chunk = std::max<Eigen::Index>(1, (Eigen::Index{1} << 16) / dim);
  CMatrix in(dim, chunk);
  CMatrix out(dim, chunk);
  const auto nb = static_cast<Eigen::Index>(bases.size());
  for (Eigen::Index start = 0; start < nb; start += chunk) {
    const Eigen::Index cols = std::min(chunk, nb - start);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Index b = bases[static_cast<Index>(start + c)];
      for (Eigen::Index r = 0; r < dim; ++r) in(r, c) = a[static_cast<Eigen::Index>(b + offsets[static_cast<Index>(r)])];
    }
    out.leftCols(cols).noalias() = u * in.leftCols(cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Index b = bases[static_cast<Index>(start + c)];
      for (Eigen::Index r = 0; r < dim; ++r) a[static_cast<Eigen::Index>(b + offsets[static_cast<Index>(r)])] = out(r, c);
    }
  }
}

void apply_permutation(CVector& a, const std::vector<Index>& bases, const std::vector<Index>& offsets,
                       const std::vector<Index>& perm) {
  std::vector<Complex> tmp(offsets.size());
  for (Index b : bases) {
    for (Index r = 0; r < offsets.size(); ++r) tmp[perm[r]] = a[static_cast<Eigen::Index>(b + offsets[r])];
    for (Index r = 0; r < offsets.size(); ++r) a[static_cast<Eigen::Index>(b + offsets[r])] = tmp[r];
  }
}

}  // namespace

namespace detail {

void apply_gate_raw(CVector& a, const SiteRegister& reg, const GateOp& gate) {
  gate.validate(reg);
  const std::vector<Index> offsets = target_offsets(reg, gate.targets);
  const std::vector<Index> bases = gate_bases(reg, gate.targets, gate.controls);
  if (const auto* d = std::get_if<DenseAction>(&gate.action)) {
    apply_dense(a, bases, offsets, d->unitary);
  } else {
    apply_permutation(a, bases, offsets, local_permutation(gate, reg));
  }
}

}  // namespace detail

void apply_gate_inplace(QuditState& state, const GateOp& gate) {
  detail::apply_gate_raw(state.mutable_amplitudes(), state.site_register(), gate);
}

QuditState apply_gate(QuditState state, const GateOp& gate) {
  apply_gate_inplace(state, gate);
  state.check_norm();
  return state;
}

QuditState apply_sum_d(QuditState state, Site control, Site target) {
  const SiteRegister& reg = state.site_register();
  reg.check_sites(std::vector<Site>{control, target}, "SUM_d");
  if (reg.dim(control) != reg.dim(target)) {
    throw Error(Errc::gate_shape, "SUM_d needs control and target of equal dimension");
  }
  return apply_gate(std::move(state), sum_d(control, target));
}

QuditState apply_controlled_block_cycle(QuditState state, Site control,
                                        const std::vector<std::vector<Site>>& blocks) {
  const SiteRegister& reg = state.site_register();
  reg.check_sites(std::span<const Site>(&control, 1), "block cycle");
  for (const auto& b : blocks) reg.check_sites(b, "block cycle");
  if (reg.dim(control) != 2) throw Error(Errc::gate_shape, "block-cycle control must be a qubit");
  GateOp g = controlled_block_cycle(control, blocks);
  for (std::size_t k = 1; k < blocks.size(); ++k) {
    for (std::size_t i = 0; i < blocks[k].size(); ++i) {
      if (reg.dim(blocks[k][i]) != reg.dim(blocks[0][i])) {
        throw Error(Errc::block_shape, "blocks have different local-dimension profiles");
      }
    }
  }
  return apply_gate(std::move(state), g);
}

QuditState apply_qft(QuditState state, const std::vector<Site>& sites) {
  const SiteRegister& reg = state.site_register();
  reg.check_sites(sites, "QFT");
  for (Site s : sites) {
    if (reg.dim(s) != 2) throw Error(Errc::gate_shape, "QFT site " + std::to_string(s) + " is not a qubit");
  }
  for (const GateOp& g : qft_gates(sites)) apply_gate_inplace(state, g);
  state.check_norm();
  return state;
}

double outcome_probability(const QuditState& state, std::span<const Site> sites, std::span<const Digit> digits) {
  const SiteRegister& reg = state.site_register();
  if (sites.size() != digits.size()) throw Error(Errc::invalid_basis_index, "sites and digits differ in length");
  reg.check_sites(sites, "outcome_probability");
  std::vector<Control> fixed;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    if (digits[k] >= reg.dim(sites[k])) throw Error(Errc::invalid_basis_index, "digit out of range");
    fixed.push_back({sites[k], digits[k]});
  }
  std::set<Site> uniq(sites.begin(), sites.end());
  if (uniq.size() != sites.size()) throw Error(Errc::invalid_basis_index, "repeated site");
  double p = 0.0;
  const CVector& a = state.amplitudes();
  for (Index b : detail::gate_bases(reg, {}, fixed)) p += std::norm(a[static_cast<Eigen::Index>(b)]);
  return std::clamp(p, 0.0, 1.0);
}

std::vector<double> marginal_distribution(const QuditState& state, std::span<const Site> sites) {
  const SiteRegister& reg = state.site_register();
  reg.check_sites(sites, "marginal_distribution");
  std::vector<Index> weight(sites.size());
  Index outcomes = 1;
  for (std::size_t k = sites.size(); k-- > 0;) {
    weight[k] = outcomes;
    outcomes *= reg.dim(sites[k]);
  }
  std::vector<double> probs(outcomes, 0.0);
  const CVector& a = state.amplitudes();
  for (Index i = 0; i < reg.total_dim(); ++i) {
    Index o = 0;
    for (std::size_t k = 0; k < sites.size(); ++k) o += reg.digit_at(i, sites[k]) * weight[k];
    probs[o] += std::norm(a[static_cast<Eigen::Index>(i)]);
  }
  return probs;
}

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t n_shots,
                                         std::uint64_t seed) {
  if (n_shots == 0) throw Error(Errc::domain, "n_shots must be >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  double mass = 0.0;
  for (double p : probabilities) mass += std::max(p, 0.0);
  std::size_t last = 0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    if (probabilities[i] > 0.0) last = i;
  }
  std::uint64_t remaining = n_shots;
  for (std::size_t i = 0; i < last && remaining > 0; ++i) {
    const double p = std::max(probabilities[i], 0.0);
    const double cond = mass > 0.0 ? std::clamp(p / mass, 0.0, 1.0) : 0.0;
    std::uint64_t k = 0;
    if (cond >= 1.0) {
      k = remaining;
    } else if (cond > 0.0) {
      std::binomial_distribution<std::uint64_t> draw(remaining, cond);
      k = draw(rng);
    }
    counts[i] = k;
    remaining -= k;
    mass -= p;
  }
  if (!counts.empty()) counts[last] += remaining;
  return counts;
}

OutcomeCounts sample_outcomes(const QuditState& state, std::span<const Site> sites, std::uint64_t n_shots,
                              std::uint64_t seed) {
  const std::vector<double> probs = marginal_distribution(state, sites);
  const std::vector<std::uint64_t> counts = sample_counts(probs, n_shots, seed);
  std::vector<Digit> dims;
  for (Site s : sites) dims.push_back(state.site_register().dim(s));
  OutcomeCounts out;
  if (dims.empty()) {
    out[{}] = n_shots;
    return out;
  }
  const SiteRegister outcome_reg(dims);
  for (Index o = 0; o < counts.size(); ++o) {
    if (counts[o] > 0) out[outcome_reg.digits_of(o)] = counts[o];
  }
  return out;
}

}  // namespace iprqs
