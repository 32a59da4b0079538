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

#include "iprqs/core/circuit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "iprqs/core/errors.hpp"
#include "iprqs/core/kernels.hpp"

namespace iprqs {
namespace {

std::vector<Site> support_of(const std::vector<GateOp>& gates) {
  std::set<Site> s;
  for (const GateOp& g : gates) {
    s.insert(g.targets.begin(), g.targets.end());
    for (const Control& c : g.controls) s.insert(c.site);
  }
  return {s.begin(), s.end()};
}

GateOp remap(GateOp g, const std::vector<Site>& support) {
  auto local = [&](Site s) {
    return static_cast<Site>(std::lower_bound(support.begin(), support.end(), s) - support.begin());
  };
  for (Site& t : g.targets) t = local(t);
  for (Control& c : g.controls) c.site = local(c.site);
  return g;
}

/// Caches the fused unitary per shared body so every power reuses it.
class Runner {
 public:
  Runner(const SiteRegister& reg, const ExecutionOptions& opts) : reg_(reg), opts_(opts) {}

  template <typename Apply>
  void run(const std::vector<CircuitStep>& steps, Apply&& apply) {
    for (const CircuitStep& step : steps) {
      if (const auto* g = std::get_if<GateOp>(&step)) {
        apply(*g);
        continue;
      }
      const auto& block = std::get<ControlledRepeat>(step);
      if (block.repetitions == 0 || block.body->empty()) continue;
      const std::vector<Site> support = support_of(*block.body);
      if (reg_.subspace_dim(support) <= opts_.fuse_cap) {
        const FusedBlock& fused = fused_for(block.body);
        GateOp g{fused.support, block.controls, DenseAction{matrix_power(fused.unitary, block.repetitions)},
                 block.label};
        apply(g);
      } else {
        for (std::uint64_t r = 0; r < block.repetitions; ++r) {
          for (const GateOp& g : *block.body) apply(controlled(g, block.controls));
        }
      }
    }
  }

 private:
  const FusedBlock& fused_for(const std::shared_ptr<const std::vector<GateOp>>& body) {
    auto it = cache_.find(body.get());
    if (it == cache_.end()) it = cache_.emplace(body.get(), fuse(*body, reg_)).first;
    return it->second;
  }

  const SiteRegister& reg_;
  ExecutionOptions opts_;
  std::map<const void*, FusedBlock> cache_;
};

}  // namespace

void CircuitPlan::validate() const {
  for (const CircuitStep& step : steps) {
    if (const auto* g = std::get_if<GateOp>(&step)) {
      g->validate(site_register);
    } else {
      const auto& block = std::get<ControlledRepeat>(step);
      if (!block.body) throw Error(Errc::gate_shape, "repeated block without body");
      for (const GateOp& g : *block.body) controlled(g, block.controls).validate(site_register);
    }
  }
  site_register.check_sites(readout_sites, "readout");
  if (readout_sites.size() != readout_target.size()) {
    throw Error(Errc::gate_shape, "readout target length differs from readout sites");
  }
}

std::uint64_t gate_count(const CircuitPlan& plan) {
  std::uint64_t n = 0;
  for (const CircuitStep& step : plan.steps) {
    if (std::holds_alternative<GateOp>(step)) {
      ++n;
    } else {
      const auto& block = std::get<ControlledRepeat>(step);
      n += block.repetitions * block.body->size();
    }
  }
  return n;
}

std::uint64_t gate_count(const CircuitPlan& plan, std::string_view name) {
  std::uint64_t n = 0;
  for (const CircuitStep& step : plan.steps) {
    if (const auto* g = std::get_if<GateOp>(&step)) {
      n += g->name == name ? 1 : 0;
    } else {
      const auto& block = std::get<ControlledRepeat>(step);
      const auto per = std::count_if(block.body->begin(), block.body->end(),
                                     [&](const GateOp& g) { return g.name == name; });
      n += block.repetitions * static_cast<std::uint64_t>(per);
    }
  }
  return n;
}

void execute(const CircuitPlan& plan, QuditState& state, const ExecutionOptions& opts) {
  if (!(state.site_register() == plan.site_register)) {
    throw Error(Errc::dimension_mismatch, "state register does not match the plan");
  }
  Runner runner(plan.site_register, opts);
  runner.run(plan.steps, [&](const GateOp& g) { apply_gate_inplace(state, g); });
  state.check_norm();
}

void execute(const CircuitPlan& plan, SparseState& state, const ExecutionOptions& opts) {
  if (!(state.site_register() == plan.site_register)) {
    throw Error(Errc::dimension_mismatch, "state register does not match the plan");
  }
  Runner runner(plan.site_register, opts);
  runner.run(plan.steps, [&](const GateOp& g) { state.apply(g); });
  state.check_norm();
}

FusedBlock fuse(const std::vector<GateOp>& gates, const SiteRegister& reg) {
  FusedBlock out;
  out.support = support_of(gates);
  std::vector<Digit> dims;
  for (Site s : out.support) dims.push_back(reg.dim(s));
  const SiteRegister local(dims);
  const Index d = local.total_dim();
  // Identity laid out row-major: the trailing "column" site indexes basis inputs.
  dims.push_back(static_cast<Digit>(d));
  const SiteRegister work(dims);
  CVector buf = CVector::Zero(static_cast<Eigen::Index>(d * d));
  for (Index i = 0; i < d; ++i) buf[static_cast<Eigen::Index>(i * d + i)] = 1.0;
  for (const GateOp& g : gates) detail::apply_gate_raw(buf, work, remap(g, out.support));
  out.unitary = Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      buf.data(), static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  return out;
}

CMatrix circuit_unitary(const CircuitPlan& plan, Index cap) {
  const Index n = plan.site_register.total_dim();
  if (n > cap) throw Error(Errc::size_cap, "register of dimension " + std::to_string(n) + " exceeds unitary cap");
  std::vector<Digit> dims = plan.site_register.local_dims();
  dims.push_back(static_cast<Digit>(n));
  const SiteRegister work(dims);
  CVector buf = CVector::Zero(static_cast<Eigen::Index>(n * n));
  for (Index i = 0; i < n; ++i) buf[static_cast<Eigen::Index>(i * n + i)] = 1.0;
  Runner runner(plan.site_register, {});
  runner.run(plan.steps, [&](const GateOp& g) { detail::apply_gate_raw(buf, work, g); });
  return Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>(
      buf.data(), static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
}

GateOp shift_sites(GateOp gate, Site offset) {
  for (Site& t : gate.targets) t += offset;
  for (Control& c : gate.controls) c.site += offset;
  return gate;
}

CMatrix matrix_power(const CMatrix& u, std::uint64_t n) {
  CMatrix result = CMatrix::Identity(u.rows(), u.cols());
  CMatrix base = u;
  bool first = true;
  while (n > 0) {
    if (n & 1U) {
      if (first) {
        result = base;
        first = false;
      } else {
        result = result * base;
      }
    }
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace iprqs
