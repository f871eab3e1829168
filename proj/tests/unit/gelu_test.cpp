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
#include <random>

#include "softex/errors.hpp"
#include "softex/gelu.hpp"
#include "softex/minimax.hpp"
#include "softex/qfunction.hpp"

namespace softex {
namespace {

// Regression fixture: four-term relative-metric fit at x_end = 2.8, as
// produced by an independent least-squares/exchange prototype.
SumExpParams FourTerms() {
  SumExpParams p;
  p.terms = {{0.03624107854530191, 158.2676310468837},
             {0.09388324573987983, 7.934284183980176},
             {0.15607862855371202, 1.3676291950338464},
             {0.2106230348265843, 0.5637361496140095}};
  p.r_max = 0.006348024669044104;
  return p;
}

TEST(GeluTest, ParamsValidate) {
  EXPECT_NO_THROW(FourTerms().Validate());
  SumExpParams bad = FourTerms();
  bad.terms[0].a = -1;
  EXPECT_THROW(bad.Validate(), ConfigError);
  SumExpParams heavy;
  heavy.terms = {{0.3, 1}, {0.3, 2}};
  EXPECT_THROW(heavy.Validate(), ConfigError);
  EXPECT_THROW(SumExpParams{}.Validate(), ConfigError);
}

TEST(GeluTest, SumExpAtZeroIsWeightSum) {
  const SumExpParams p = FourTerms();
  const FixedAcc s = sum_exp_fixed(Bf16::Zero(), p, 14);
  const double expect = 0.5 - p.r_max / 2;
  EXPECT_LE(std::fabs(s.ToDouble() - expect), 4 * std::ldexp(1.0, -14));
  EXPECT_LE(s.ToDouble(), expect);
}

TEST(GeluTest, SumExpVanishesForLargeInput) {
  EXPECT_TRUE(sum_exp(Bf16::FromDouble(10.0), FourTerms(), 14).is_zero());
  EXPECT_TRUE(sum_exp(Bf16::FromDouble(-10.0), FourTerms(), 14).is_zero());
}

TEST(GeluTest, SumExpNearQOfOne) {
  const double s = sum_exp(Bf16::One(), FourTerms(), 14).ToDouble();
  const double q1 = 0.15865525393145705141;
  EXPECT_LE(std::fabs(s - q1), 2 * FourTerms().r_max * q1 + 4 * std::ldexp(1.0, -14) +
                                   bf16_ulp(Bf16::FromDouble(q1)));
}

TEST(GeluTest, AccumulatorBound) {
  const SumExpParams p = FourTerms();
  for (int bits = 8; bits <= 16; ++bits) {
    for (double x = -6; x <= 6; x += 0.01) {
      const double s = sum_exp_fixed(Bf16::FromDouble(x), p, bits).ToDouble();
      EXPECT_GE(s, 0.0);
      EXPECT_LE(s, 0.5 + p.n_w() * std::ldexp(1.0, -bits));
    }
  }
}

TEST(GeluTest, ScalarFixtures) {
  const SumExpParams p = FourTerms();
  EXPECT_TRUE(gelu_scalar(Bf16::Zero(), p).is_zero());
  EXPECT_EQ(gelu_scalar(Bf16::FromDouble(10.0), p).ToDouble(), 10.0);
  const Bf16 neg = gelu_scalar(Bf16::FromDouble(-10.0), p);
  EXPECT_LE(std::fabs(neg.ToDouble()), 10 * std::ldexp(1.0, -14));
  EXPECT_EQ(gelu_scalar(Bf16::FromBits(0x8000), p).bits(), 0x8000);
  const double g1 = gelu_scalar(Bf16::One(), p).ToDouble();
  EXPECT_LE(std::fabs(g1 / 0.84134474606854294859 - 1.0), 0.01);
}

TEST(GeluTest, SignAndMonotoneTail) {
  const SumExpParams p = FourTerms();
  double prev = -1.0;
  for (double x = -6; x <= 6; x += 0.003) {
    const Bf16 b = Bf16::FromDouble(x);
    const double y = gelu_scalar(b, p).ToDouble();
    EXPECT_TRUE(y == 0.0 || std::signbit(y) == std::signbit(b.ToDouble())) << x;
    if (b.ToDouble() >= 2.8) {
      EXPECT_GE(y, prev) << x;
      prev = y;
    }
  }
}

TEST(GeluTest, WeightReversalIsInvisible) {
  const SumExpParams p = FourTerms();
  for (double x = -6; x <= 6; x += 0.001) {
    const Bf16 b = Bf16::FromDouble(x);
    const FixedAcc fwd = sum_exp_fixed(b, p, 14, false);
    const FixedAcc rev = sum_exp_fixed(b, p, 14, true);
    EXPECT_FALSE(fwd.saturated());
    EXPECT_EQ(fwd, rev) << x;
  }
  std::vector<Bf16> xs;
  for (int i = 0; i < 100; ++i) xs.push_back(Bf16::FromDouble(-3 + 0.06 * i));
  const auto batch = sum_exp_batch(xs, p, 14, 16);
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(batch[i], sum_exp(xs[i], p, 14));
}

TEST(GeluTest, Baselines) {
  EXPECT_EQ(gelu_tanh_baseline(0.0), 0.0);
  EXPECT_NEAR(gelu_tanh_baseline(1.0), 0.84119199060827671763, 1e-14);
  EXPECT_NEAR(gelu_tanh_baseline(20.0), 20.0, 1e-12);
  EXPECT_EQ(gelu_sigmoid_baseline(0.0), 0.0);
  EXPECT_NEAR(gelu_sigmoid_baseline(1.0), 0.84579576593282129015, 1e-14);
  EXPECT_NEAR(gelu_sigmoid_baseline(-1.0), -0.15420423406717870985, 1e-14);
  // x*sigma(kx) - x/2 is even.
  for (double x = 0.1; x < 5; x += 0.7) {
    EXPECT_NEAR(gelu_sigmoid_baseline(x) - x / 2, gelu_sigmoid_baseline(-x) + x / 2, 1e-14);
  }
}

TEST(GeluTest, SweepRowsAndMonotonicity) {
  std::map<int, SumExpParams> sets = {{4, FourTerms()}};
  const std::vector<int> bits = {8, 10, 12, 14};
  const std::vector<int> terms = {4};
  const auto rows = bits_terms_sweep(bits, terms, sets, 20001);
  ASSERT_EQ(rows.size(), 4u);
  // Output rounding caps the max error, the mean keeps improving.
  EXPECT_LE(rows.back().max_abs_err, rows.front().max_abs_err);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(rows[i].mean_abs_err, rows[i - 1].mean_abs_err);
  }
  const std::vector<int> missing = {3};
  EXPECT_THROW(bits_terms_sweep(bits, missing, sets, 100), ConfigError);
}

TEST(GeluTest, RelativeErrorInsideFitRange) {
  const SumExpParams p = FourTerms();
  double worst = 0.0;
  for (double x = 0.5; x <= 2.8; x += 0.0005) {
    const Bf16 b = Bf16::FromDouble(x);
    const double ref = gelu_exact(b.ToDouble());
    worst = std::max(worst, std::fabs(gelu_scalar(b, p).ToDouble() - ref) / ref);
  }
  EXPECT_LE(worst, 2 * p.r_max);
}

TEST(GeluTest, JsonRoundTrip) {
  SumExpParams p = FourTerms();
  p.fit_meta = R"({"N":4})";
  const SumExpParams q = sum_exp_params_from_json(to_json(p));
  ASSERT_EQ(q.n_w(), 4u);
  EXPECT_EQ(q.terms[2].a, p.terms[2].a);
  EXPECT_EQ(q.terms[0].b, p.terms[0].b);
  EXPECT_EQ(q.r_max, p.r_max);
  EXPECT_THROW(sum_exp_params_from_json(R"({"terms":[{"a":0.4,"b":1},{"a":0.4,"b":2}]})"),
               ConfigError);
}

}  // namespace
}  // namespace softex
