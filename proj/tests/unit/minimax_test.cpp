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
#include <numbers>

#include "softex/errors.hpp"
#include "softex/minimax.hpp"
#include "softex/qfunction.hpp"

namespace softex {
namespace {

// r_max of the relative-metric fits at x_end = 2.8 from an independent
// least-squares/exchange prototype.
constexpr double kRmax[] = {0.24724622079164296, 0.05415838907717562, 0.01685943439573497,
                            0.006348024669044104, 0.0027112744506687767};

TEST(MinimaxTest, ChianiInitFixtures) {
  const SumExpParams one = chiani_init(1);
  ASSERT_EQ(one.n_w(), 1u);
  EXPECT_DOUBLE_EQ(one.terms[0].a, 0.5);
  EXPECT_DOUBLE_EQ(one.terms[0].b, 0.5);
  const SumExpParams two = chiani_init(2);
  EXPECT_DOUBLE_EQ(two.terms[0].a, 0.25);
  EXPECT_DOUBLE_EQ(two.terms[1].a, 0.25);
  EXPECT_DOUBLE_EQ(two.terms[0].b, 1.0);
  EXPECT_DOUBLE_EQ(two.terms[1].b, 0.5);
  EXPECT_THROW(chiani_init(0), DomainError);
}

TEST(MinimaxTest, ChianiIsUpperBound) {
  for (int n = 1; n <= 8; ++n) {
    const SumExpParams p = chiani_init(n);
    for (double x = 0; x <= 10; x += 0.001) {
      EXPECT_GE(residual(p, x, ErrorMetric::kAbsolute), -1e-15) << n << " " << x;
    }
  }
}

TEST(MinimaxTest, ResidualDefinitions) {
  const SumExpParams p = chiani_init(1);
  const double q = q_reference(1.0);
  EXPECT_DOUBLE_EQ(residual(p, 1.0, ErrorMetric::kAbsolute), 0.5 * std::exp(-0.5) - q);
  EXPECT_DOUBLE_EQ(residual(p, 1.0, ErrorMetric::kRelative), (0.5 * std::exp(-0.5) - q) / q);
}

TEST(MinimaxTest, RelativeFitsMatchFixtures) {
  for (int n = 1; n <= 5; ++n) {
    MinimaxProblem pr;
    pr.n_terms = n;
    const MinimaxSolution s = solve_minimax(pr);
    EXPECT_NEAR(s.err_max, kRmax[n - 1], 1e-9 * kRmax[n - 1]) << n;
    EXPECT_NEAR(s.params.sum_a(), 0.5 - s.err_max / 2, 1e-10);
    EXPECT_NEAR(residual(s.params, 0.0, pr.metric), -s.err_max, 1e-8);
    EXPECT_NEAR(residual(s.params, pr.x_end, pr.metric), -s.err_max, 1e-8);
    ASSERT_EQ(s.extrema.size(), 2u * n);
    for (std::size_t k = 0; k < s.extrema.size(); ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      EXPECT_NEAR(residual(s.params, s.extrema[k], pr.metric), sign * s.err_max, 1e-8);
      if (k) {
        EXPECT_GT(s.extrema[k], s.extrema[k - 1]);
      }
    }
    EXPECT_GT(s.extrema.front(), 0.0);
    EXPECT_NO_THROW(s.params.Validate());
  }
}

TEST(MinimaxTest, EquioscillationBoundOnDenseGrid) {
  MinimaxProblem pr;
  pr.n_terms = 4;
  const MinimaxSolution s = solve_minimax(pr);
  double worst = 0.0;
  for (int i = 0; i <= 100000; ++i) {
    worst = std::max(worst, std::fabs(residual(s.params, pr.x_end * i / 100000.0, pr.metric)));
  }
  EXPECT_LE(worst, s.err_max * (1 + 1e-6));
}

TEST(MinimaxTest, ZeroBoundaryCondition) {
  MinimaxProblem pr;
  pr.n_terms = 3;
  pr.r0_mode = R0Mode::kZero;
  const MinimaxSolution s = solve_minimax(pr);
  EXPECT_NEAR(residual(s.params, 0.0, pr.metric), 0.0, 1e-12);
  EXPECT_NEAR(s.params.sum_a(), 0.5, 1e-12);
}

TEST(MinimaxTest, AbsoluteMetric) {
  MinimaxProblem pr;
  pr.n_terms = 3;
  pr.metric = ErrorMetric::kAbsolute;
  const MinimaxSolution s = solve_minimax(pr);
  ASSERT_EQ(s.extrema.size(), 6u);
  EXPECT_NEAR(residual(s.params, 0.0, pr.metric), -s.err_max, 1e-10);
  for (std::size_t k = 0; k < s.extrema.size(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    EXPECT_NEAR(residual(s.params, s.extrema[k], pr.metric), sign * s.err_max, 1e-10);
  }
}

TEST(MinimaxTest, Deterministic) {
  MinimaxProblem pr;
  pr.n_terms = 4;
  const MinimaxSolution a = solve_minimax(pr);
  const MinimaxSolution b = solve_minimax(pr);
  for (std::size_t i = 0; i < a.params.n_w(); ++i) {
    EXPECT_EQ(a.params.terms[i].a, b.params.terms[i].a);
    EXPECT_EQ(a.params.terms[i].b, b.params.terms[i].b);
  }
  EXPECT_EQ(a.err_max, b.err_max);
}

TEST(MinimaxTest, ProblemValidation) {
  MinimaxProblem pr;
  pr.n_terms = 9;
  EXPECT_THROW(solve_minimax(pr), DomainError);
  pr.n_terms = 2;
  pr.x_end = 0;
  EXPECT_THROW(solve_minimax(pr), DomainError);
}

TEST(MinimaxTest, FailureCarriesProfile) {
  MinimaxProblem pr;
  pr.n_terms = 3;
  pr.max_iterations = 1;  // one exchange cannot satisfy the convergence test
  try {
    solve_minimax(pr);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.residual_profile().size(), 1001u);
  }
}

TEST(MinimaxTest, StringConversions) {
  EXPECT_EQ(error_metric_from_string("absolute"), ErrorMetric::kAbsolute);
  EXPECT_EQ(r0_mode_from_string("zero"), R0Mode::kZero);
  EXPECT_EQ(to_string(R0Mode::kMinusMax), "minus_rmax");
  EXPECT_THROW(error_metric_from_string("l2"), ConfigError);
}

}  // namespace
}  // namespace softex
