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
#include "softex/fixed_point.hpp"

namespace softex {
namespace {

TEST(FixedPointTest, FromWideTruncates) {
  EXPECT_EQ(fixed14_from_wide(0.0).raw(), 0u);
  EXPECT_EQ(fixed14_from_wide(0.5).raw(), 8192u);
  EXPECT_EQ(fixed14_from_wide(std::ldexp(1.0, -15)).raw(), 0u);
  EXPECT_EQ(fixed14_from_wide(std::nextafter(1.0, 0.0)).raw(), 16383u);
  EXPECT_THROW(fixed14_from_wide(1.0), DomainError);
  EXPECT_THROW(fixed14_from_wide(-0.1), DomainError);
}

TEST(FixedPointTest, ToBf16Fixtures) {
  EXPECT_EQ(fixed14_to_bf16(Fixed14(14, 0)).ToDouble(), 0.0);
  EXPECT_EQ(fixed14_to_bf16(Fixed14(14, 8192)).ToDouble(), 0.5);
  // 12345 / 2^14 = 0.75347900390625 lies between 0.75 and 0.7578125.
  EXPECT_EQ(fixed14_to_bf16(Fixed14(14, 12345)).ToDouble(), 0.75390625);
}

TEST(FixedPointTest, AllCodesRoundWithinHalfUlp) {
  for (std::uint32_t r = 0; r < (1u << 14); ++r) {
    const Fixed14 v(14, r);
    const Bf16 b = fixed14_to_bf16(v);
    const double exact = r / 16384.0;
    EXPECT_LE(std::fabs(b.ToDouble() - exact), bf16_ulp(b) / 2) << r;
  }
}

TEST(FixedPointTest, AdditionSaturates) {
  const Fixed14 a(14, 10000);
  const Fixed14 b(14, 9000);
  EXPECT_EQ(a.SaturatingAdd(b).raw(), 16383u);
  EXPECT_TRUE(a.SaturatingAdd(b).saturated());
  EXPECT_EQ(a.SaturatingAdd(Fixed14(14, 1)).raw(), 10001u);
  EXPECT_THROW(a.SaturatingAdd(FixedAcc(12, 1)), DomainError);
}

TEST(FixedPointTest, AccumulateTruncatesEachAddend) {
  FixedAcc acc(8);
  for (int i = 0; i < 10; ++i) acc.AccumulateTruncated(0.0039);  // just under 2^-8
  EXPECT_EQ(acc.raw(), 0u);
  acc.AccumulateTruncated(0.75);
  acc.AccumulateTruncated(0.75);
  EXPECT_EQ(acc.raw(), 255u);
  EXPECT_THROW(acc.AccumulateTruncated(-1e-9), DomainError);
}

TEST(FixedPointTest, WidthIsBounded) {
  EXPECT_THROW(FixedAcc(7), DomainError);
  EXPECT_THROW(FixedAcc(17), DomainError);
  EXPECT_EQ(FixedAcc(16).max_raw(), 65535u);
}

}  // namespace
}  // namespace softex
