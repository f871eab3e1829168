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
#include "softex/qfunction.hpp"

namespace softex {
namespace {

// Values from a 30-digit arbitrary-precision evaluation.
struct QFixture {
  double x;
  double q;
};
constexpr QFixture kQ[] = {
    {0.0, 0.5},
    {0.5, 0.30853753872598689636},
    {1.0, 0.15865525393145705141},
    {2.0, 0.0227501319481792072},
    {2.8, 0.0025551303304279342076},
    {5.0, 2.8665157187919391167e-7},
};

TEST(QFunctionTest, ReferenceMatchesHighPrecision) {
  for (const QFixture& f : kQ) {
    EXPECT_NEAR(q_reference(f.x) / f.q, 1.0, 1e-12) << f.x;
  }
  EXPECT_LT(q_reference(40.0), 1e-300);
  EXPECT_NEAR(q_reference(-1.0), 1.0 - 0.15865525393145705141, 1e-15);
}

TEST(QFunctionTest, CraigIntegralAgrees) {
  for (const QFixture& f : kQ) {
    EXPECT_NEAR(q_craig(f.x) / f.q, 1.0, 1e-12) << f.x;
  }
  for (double x = 0.0; x <= 8.0; x += 0.37) {
    EXPECT_NEAR(q_craig(x) / q_reference(x), 1.0, 1e-12) << x;
  }
  EXPECT_THROW(q_craig(-1.0), DomainError);
}

TEST(QFunctionTest, ExactGelu) {
  EXPECT_EQ(gelu_exact(0.0), 0.0);
  EXPECT_NEAR(gelu_exact(1.0), 0.84134474606854294859, 1e-15);
  EXPECT_NEAR(gelu_exact(-1.0), -0.15865525393145705141, 1e-15);
}

}  // namespace
}  // namespace softex
