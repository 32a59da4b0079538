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

#include "iprqs/core/sparse_state.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"

namespace iprqs {
namespace {

void sort_and_compact(std::vector<SparseState::Entry>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (w > 0 && entries[w - 1].first == entries[i].first) {
      entries[w - 1].second += entries[i].second;
    } else {
      entries[w++] = entries[i];
    }
  }
  entries.resize(w);
  std::erase_if(entries, [](const auto& e) { return e.second == Complex(0.0, 0.0); });
}

}  // namespace

SparseState::SparseState(SiteRegister reg, std::vector<Entry> entries)
    : reg_(std::move(reg)), entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.first >= reg_.total_dim()) throw Error(Errc::invalid_basis_index, "sparse entry outside register");
  }
  sort_and_compact(entries_);
  if (norm_drift() > kNormTolerance) {
    throw Error(Errc::not_normalized, "sparse state norm deviates from 1 by " + std::to_string(norm_drift()));
  }
}

SparseState SparseState::from_dense(const QuditState& state) {
  std::vector<Entry> entries;
  const CVector& a = state.amplitudes();
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != Complex(0.0, 0.0)) entries.emplace_back(static_cast<Index>(i), a[i]);
  }
  return SparseState(state.site_register(), std::move(entries));
}

const std::vector<SparseState::Entry>& SparseState::entries() const {
  if (!sorted_) {
    std::sort(entries_.begin(), entries_.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    sorted_ = true;
  }
  return entries_;
}

QuditState SparseState::to_dense(Index cap) const {
  if (reg_.total_dim() > cap) throw Error(Errc::size_cap, "register too large to densify");
  CVector a = CVector::Zero(static_cast<Eigen::Index>(reg_.total_dim()));
  for (const auto& [i, v] : entries_) a[static_cast<Eigen::Index>(i)] = v;
  return QuditState(reg_, std::move(a));
}

double SparseState::norm_drift() const {
  double n2 = 0.0;
  for (const auto& e : entries_) n2 += std::norm(e.second);
  return std::abs(std::sqrt(n2) - 1.0);
}

void SparseState::check_norm(double tol) const {
  const double drift = norm_drift();
  if (!(drift <= tol)) {
    throw Error(Errc::numerical_drift, "norm drift " + std::to_string(drift) + " exceeds " + std::to_string(tol));
  }
}

bool SparseState::controls_match(Index idx, const std::vector<Control>& controls) const {
  for (const Control& c : controls) {
    if (reg_.digit_at(idx, c.site) != c.value) return false;
  }
  return true;
}

void SparseState::apply(const GateOp& gate) {
  gate.validate(reg_);
  if (const auto* d = std::get_if<DenseAction>(&gate.action)) {
    apply_dense(gate, d->unitary);
  } else {
    apply_permutation(gate);
  }
}

void SparseState::apply_dense(const GateOp& gate, const CMatrix& u) {
  const std::vector<Index> offsets = detail::target_offsets(reg_, gate.targets);
  const auto dim = static_cast<Eigen::Index>(offsets.size());

  // Column c of a monomial matrix has one nonzero, at row image[c].
  std::vector<Eigen::Index> image(static_cast<std::size_t>(dim), -1);
  bool monomial = true;
  for (Eigen::Index c = 0; c < dim && monomial; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (u(r, c) == Complex(0.0, 0.0)) continue;
      if (image[static_cast<std::size_t>(c)] >= 0) {
        monomial = false;
        break;
      }
      image[static_cast<std::size_t>(c)] = r;
    }
  }

  auto split = [&](Index idx, Index& local, Index& offset) {
    local = 0;
    offset = 0;
    for (Site s : gate.targets) {
      const Digit v = reg_.digit_at(idx, s);
      local = local * reg_.dim(s) + v;
      offset += v * reg_.stride(s);
    }
  };

  if (monomial) {
    for (auto& [idx, amp] : entries_) {
      if (!controls_match(idx, gate.controls)) continue;
      Index local = 0;
      Index offset = 0;
      split(idx, local, offset);
      const Eigen::Index r = image[static_cast<std::size_t>(local)];
      idx = idx - offset + offsets[static_cast<std::size_t>(r)];
      amp *= u(r, static_cast<Eigen::Index>(local));
    }
    sorted_ = false;
    return;
  }

  // Group amplitudes by the index with the target digits zeroed (open addressing).
  std::size_t cap = 16;
  while (cap < 2 * entries_.size()) cap *= 2;
  constexpr std::size_t kEmpty = static_cast<std::size_t>(-1);
  std::vector<std::size_t> table(cap, kEmpty);
  const int shift = 64 - std::countr_zero(cap);
  std::vector<Index> bases;
  bases.reserve(entries_.size());
  std::vector<Complex> acc;
  std::vector<Entry> out;
  out.reserve(entries_.size());
  for (const auto& [idx, amp] : entries_) {
    if (!controls_match(idx, gate.controls)) {
      out.emplace_back(idx, amp);
      continue;
    }
    Index local = 0;
    Index offset = 0;
    split(idx, local, offset);
    const Index base = idx - offset;
    std::size_t h = static_cast<std::size_t>((static_cast<std::uint64_t>(base) * 0x9E3779B97F4A7C15ULL) >> shift);
    while (table[h] != kEmpty && bases[table[h]] != base) h = (h + 1) & (cap - 1);
    if (table[h] == kEmpty) {
      table[h] = bases.size();
      bases.push_back(base);
      acc.resize(acc.size() + static_cast<std::size_t>(dim), Complex(0.0, 0.0));
    }
    Complex* a = acc.data() + table[h] * static_cast<std::size_t>(dim);
    const auto col = u.col(static_cast<Eigen::Index>(local));
    for (Eigen::Index r = 0; r < dim; ++r) a[r] += col[r] * amp;
  }
  for (std::size_t g = 0; g < bases.size(); ++g) {
    const Complex* a = acc.data() + g * static_cast<std::size_t>(dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      if (a[r] != Complex(0.0, 0.0)) out.emplace_back(bases[g] + offsets[static_cast<Index>(r)], a[r]);
    }
  }
  // Bases are distinct, so output indices are distinct.
  entries_ = std::move(out);
  sorted_ = false;
}

void SparseState::apply_permutation(const GateOp& gate) {
  const std::size_t k = gate.targets.size();
  std::vector<Digit> in(k);
  std::vector<Digit> mapped(k);
  for (auto& [idx, amp] : entries_) {
    if (!controls_match(idx, gate.controls)) continue;
    for (std::size_t i = 0; i < k; ++i) in[i] = reg_.digit_at(idx, gate.targets[i]);
    if (const auto* p = std::get_if<SitePermutation>(&gate.action)) {
      for (std::size_t i = 0; i < k; ++i) mapped[i] = in[p->source[i]];
    } else {
      const auto& m = std::get<ModularAdd>(gate.action);
      const Digit d = reg_.dim(gate.targets[1]);
      mapped[0] = in[0];
      mapped[1] = m.subtract ? (in[1] + d - in[0]) % d : (in[1] + in[0]) % d;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const Index st = reg_.stride(gate.targets[i]);
      idx = idx - in[i] * st + mapped[i] * st;
    }
  }
  // A basis permutation cannot merge or cancel entries.
  sorted_ = false;
}

SparseState tensor_product(const SparseState& a, const SparseState& b) {
  std::vector<SparseState::Entry> out;
  out.reserve(a.support_size() * b.support_size());
  const Index scale = b.site_register().total_dim();
  for (const auto& [i, x] : a.entries()) {
    for (const auto& [j, y] : b.entries()) out.emplace_back(i * scale + j, x * y);
  }
  return SparseState(concat(a.site_register(), b.site_register()), std::move(out));
}

double outcome_probability(const SparseState& state, std::span<const Site> sites, std::span<const Digit> digits) {
  const SiteRegister& reg = state.site_register();
  if (sites.size() != digits.size()) throw Error(Errc::invalid_basis_index, "sites and digits differ in length");
  reg.check_sites(sites, "outcome_probability");
  double p = 0.0;
  for (const auto& [idx, amp] : state.unordered_entries()) {
    bool match = true;
    for (std::size_t k = 0; k < sites.size() && match; ++k) match = reg.digit_at(idx, sites[k]) == digits[k];
    if (match) p += std::norm(amp);
  }
  return std::clamp(p, 0.0, 1.0);
}

std::vector<double> marginal_distribution(const SparseState& state, std::span<const Site> sites) {
  const SiteRegister& reg = state.site_register();
  reg.check_sites(sites, "marginal_distribution");
  Index outcomes = 1;
  for (Site s : sites) outcomes *= reg.dim(s);
  std::vector<double> probs(outcomes, 0.0);
  for (const auto& [idx, amp] : state.unordered_entries()) {
    Index o = 0;
    for (Site s : sites) o = o * reg.dim(s) + reg.digit_at(idx, s);
    probs[o] += std::norm(amp);
  }
  return probs;
}

}  // namespace iprqs
