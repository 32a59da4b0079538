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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "iprqs/core/errors.hpp"
#include "iprqs/harness/experiments.hpp"
#include "iprqs/harness/output.hpp"

namespace iprqs {
namespace {

std::string csv(const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  write_csv(out, rows);
  return out.str();
}

TEST(NeelState, AlternatingDigits) {
  const QuditState s = neel_state(4);
  EXPECT_EQ(std::abs(s.amplitudes()[0b0101]), 1.0);
}

TEST(PointSeed, DistinctAndStable) {
  EXPECT_EQ(point_seed(7, 3), point_seed(7, 3));
  EXPECT_NE(point_seed(7, 3), point_seed(7, 4));
  EXPECT_NE(point_seed(7, 3), point_seed(8, 3));
}

TEST(OatSweep, FixedPoints) {
  ExperimentConfig c = default_config("oat_sweep");
  c.t_grid = {0.0, kPi / 4, kPi / 2};
  const auto rows = run_experiment(c);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NEAR(rows[0].estimator, 1.0, 1e-8);
  EXPECT_NEAR(*rows[0].oracle, 1.0, 1e-12);
  EXPECT_NEAR(rows[1].estimator, 0.5, 1e-8);
  EXPECT_NEAR(*rows[1].oracle, 0.5, 1e-12);
  EXPECT_NEAR(rows[2].estimator, 1.0, 1e-8);
  EXPECT_EQ(rows[1].variable, "t");
  EXPECT_NEAR(*rows[1].aux, 1.0, 1e-10);
  EXPECT_EQ(count_violations(rows), 0u);
}

TEST(OatSweep, SampledModeIsSeeded) {
  ExperimentConfig c = default_config("oat_sweep");
  c.t_grid = {0.3, 0.6};
  c.mode = Mode::sampled;
  c.n_shots = 4000;
  c.seed = 5;
  const auto a = run_experiment(c);
  EXPECT_EQ(csv(a), csv(run_experiment(c)));
  for (const auto& r : a) {
    EXPECT_EQ(r.n_shots, 4000u);
    EXPECT_GT(r.std_error, 0.0);
    EXPECT_LE(std::abs(*r.deviation()), 5.0 * r.std_error + 1e-3);
  }
  c.seed = 6;
  EXPECT_NE(csv(a), csv(run_experiment(c)));
}

TEST(PxpSweep, SmallChain) {
  ExperimentConfig c = default_config("pxp_sweep");
  c.sites = 4;
  c.h_grid = {0.2, 0.7};
  c.m_list = {2, 3};
  const auto rows = run_experiment(c);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].x, 0.2);
  EXPECT_EQ(rows[1].m, 3);
  EXPECT_NEAR(*rows[0].error_bound / *rows[1].error_bound, 4.0, 1e-12);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.oracle.has_value());
    EXPECT_TRUE(r.trotter_bound.has_value());
    EXPECT_TRUE(r.aux.has_value());
    EXPECT_FALSE(r.violation);
  }
}

TEST(AkltSweep, DegenerateFlagAndPolarization) {
  ExperimentConfig c = default_config("aklt_sweep");
  c.h_grid = {0.0, 1.0, 50.0};
  const auto rows = run_experiment(c);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].label.rfind("degenerate-ground", 0), 0u);
  EXPECT_EQ(rows[1].label, "unique-ground");
  EXPECT_LT(rows[0].estimator, 1.0);
  EXPECT_GE(rows[2].estimator, 0.99);
  for (const auto& r : rows) EXPECT_LE(std::abs(*r.deviation()), 1e-8);
}

TEST(MConvergence, BoundShrinksWithM) {
  ExperimentConfig c = default_config("m_convergence");
  c.sites = 4;
  c.m_list = {1, 2, 3, 4};
  const auto rows = run_experiment(c);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].m, static_cast<int>(i) + 1);
    EXPECT_FALSE(rows[i].violation);
    if (i > 0) {
      EXPECT_NEAR(*rows[i].error_bound * 4.0, *rows[i - 1].error_bound, 1e-12);
    }
  }
}

TEST(BoundStudy, SmallEnsembleHasNoViolations) {
  ExperimentConfig c = default_config("bound_study");
  c.ensemble = 8;
  c.ensemble_qubits = 3;
  c.m_list = {2, 3};
  c.trotter_steps = {2, 8};
  const auto rows = run_experiment(c);
  EXPECT_GT(rows.size(), 16u);
  EXPECT_EQ(count_violations(rows), 0u);
  EXPECT_EQ(csv(rows), csv(run_experiment(c)));
}

TEST(RunExperiment, ValidatesFirst) {
  ExperimentConfig c = default_config("pxp_sweep");
  c.m_list = {0};
  try {
    (void)run_experiment(c);
    FAIL() << "expected config error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::config);
  }
}

}  // namespace
}  // namespace iprqs
