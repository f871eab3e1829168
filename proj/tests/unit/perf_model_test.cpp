// Copyright 2026 The SoftEx Model Authors
// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>

#include "softex/errors.hpp"
#include "softex/perf_model.hpp"

namespace softex {
namespace {

TEST(PerfModelTest, SingleBeatIsSymbolic) {
  SoftexConfig cfg;
  for (const std::uint32_t n : {4u, 8u, 16u, 32u, 64u}) {
    cfg.lanes = n;
    EXPECT_EQ(softmax_cycles(n, 0, cfg), 1 + cfg.drain_cycles() + cfg.newton_cycles + 2);
  }
}

TEST(PerfModelTest, CalibrationNearReferenceWorkload) {
  const SoftexConfig cfg;
  const double total = 128.0 * static_cast<double>(softmax_cycles(128, expected_rescale_events(128), cfg));
  EXPECT_NEAR(total, 14200, 0.05 * 14200);
}

TEST(PerfModelTest, SoftmaxLaneScaling) {
  SoftexConfig cfg;
  auto cycles = [&cfg](std::uint32_t n) {
    cfg.lanes = n;
    return static_cast<double>(softmax_cycles(2048, expected_rescale_events(2048), cfg));
  };
  const double s48 = cycles(4) / cycles(8);
  const double s3264 = cycles(32) / cycles(64);
  EXPECT_NEAR(s48, 2.0, 0.2);
  EXPECT_NEAR(s3264, 1.5, 0.225);
  EXPECT_LT(s3264, s48);
}

TEST(PerfModelTest, SumExpScalesLinearly) {
  SoftexConfig cfg;
  cfg.lanes = 16;
  EXPECT_EQ(sumexp_cycles(16, 4, cfg), 4 + cfg.datapath_latency + 1);
  EXPECT_EQ(sumexp_cycles(16, 1, cfg), 1 + cfg.datapath_latency + 1);
  for (const std::uint32_t k : {4u, 8u, 16u, 32u}) {
    cfg.lanes = k;
    const double a = static_cast<double>(sumexp_cycles(2048, 4, cfg));
    cfg.lanes = 2 * k;
    const double b = static_cast<double>(sumexp_cycles(2048, 4, cfg));
    EXPECT_NEAR(b / a, 0.5, 0.03) << k;
  }
}

TEST(PerfModelTest, Invariants) {
  SoftexConfig cfg;
  for (const std::uint64_t len : {1u, 17u, 128u, 1000u, 2048u}) {
    std::uint64_t prev_sm = UINT64_MAX, prev_se = UINT64_MAX;
    for (const std::uint32_t n : {4u, 8u, 16u, 32u, 64u}) {
      cfg.lanes = n;
      const std::uint64_t sm = softmax_cycles(len, 3, cfg);
      const std::uint64_t se = sumexp_cycles(len, 4, cfg);
      // Short rows only pay for the deeper tree.
      if (len >= 8 * n) {
        EXPECT_LE(sm, prev_sm);
        EXPECT_LE(se, prev_se);
      }
      EXPECT_LE(softmax_cycles(len, 0, cfg), sm);
      EXPECT_LE(static_cast<double>(len) / se, static_cast<double>(n) / 4);
      prev_sm = sm;
      prev_se = se;
    }
  }
}

TEST(PerfModelTest, ValidationAndSweep) {
  SoftexConfig cfg;
  cfg.lanes = 12;
  EXPECT_THROW(softmax_cycles(10, 0, cfg), ConfigError);
  cfg.lanes = 16;
  EXPECT_THROW(softmax_cycles(0, 0, cfg), DomainError);
  EXPECT_THROW(sumexp_cycles(10, 0, cfg), DomainError);
  const std::vector<std::uint64_t> lens = {128, 2048};
  const std::vector<std::uint32_t> lanes = {4, 8, 16};
  const auto rows = lane_sweep(lens, lanes, cfg);
  EXPECT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].kernel, "softmax");
  EXPECT_EQ(lane_sweep(lens, lanes, cfg, Kernel::kSumExp)[0].kernel, "sumexp");
  EXPECT_EQ(expected_rescale_events(2048), 8u);
}

TEST(PerfModelTest, ConfigJson) {
  SoftexConfig cfg;
  cfg.lanes = 32;
  cfg.newton_cycles = 20;
  const SoftexConfig back = softex_config_from_json(to_json(cfg));
  EXPECT_EQ(back.lanes, 32u);
  EXPECT_EQ(back.newton_cycles, 20u);
  EXPECT_THROW(softex_config_from_json(R"({"lanes": 5})"), ConfigError);
}

}  // namespace
}  // namespace softex
