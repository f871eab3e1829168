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
#include <cstdint>
#include <cstring>
#include <limits>

#include "softex/bf16.hpp"

namespace softex {
namespace {

// Independent decoder: assembles the value from the fields by hand.
double DecodeFields(std::uint16_t bits) {
  const int s = bits >> 15;
  const int e = (bits >> 7) & 0xFF;
  const int m = bits & 0x7F;
  double v;
  if (e == 0) {
    v = std::ldexp(m, -133);
  } else if (e == 0xFF) {
    v = m ? std::numeric_limits<double>::quiet_NaN() : std::numeric_limits<double>::infinity();
  } else {
    v = std::ldexp(128 + m, e - 127 - 7);
  }
  return s ? -v : v;
}

// Nearest-even rounding by searching the two finite neighbours.
std::uint16_t RoundByEnumeration(double x) {
  std::uint16_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  const std::uint16_t sign = std::signbit(x) ? 0x8000 : 0;
  for (std::uint32_t mag = 0; mag < 0x7F80; ++mag) {
    const double v = DecodeFields(static_cast<std::uint16_t>(sign | mag));
    const double d = std::fabs(v - x);
    if (d < best_d || (d == best_d && (mag & 1) == 0)) {
      best_d = d;
      best = static_cast<std::uint16_t>(sign | mag);
    }
  }
  return best;
}

TEST(Bf16Test, EveryPatternRoundTrips) {
  for (std::uint32_t b = 0; b <= 0xFFFF; ++b) {
    const Bf16 v = Bf16::FromBits(static_cast<std::uint16_t>(b));
    if (v.is_nan()) {
      EXPECT_TRUE(Bf16::FromDouble(v.ToDouble()).is_nan());
      continue;
    }
    EXPECT_EQ(Bf16::FromDouble(v.ToDouble()).bits(), b) << v.ToHex();
    EXPECT_EQ(v.ToDouble(), DecodeFields(static_cast<std::uint16_t>(b))) << v.ToHex();
  }
}

TEST(Bf16Test, ConversionFixtures) {
  EXPECT_EQ(Bf16::FromDouble(1.0).bits(), 0x3F80);
  EXPECT_TRUE(Bf16::FromDouble(3.4028235e38 * 2).is_inf());
  EXPECT_EQ(Bf16::FromDouble(1.00390625).bits(), 0x3F80);
  EXPECT_EQ(Bf16::FromDouble(1.01171875).bits(), 0x3F82);  // tie rounds up to even
  EXPECT_EQ(Bf16::FromDouble(-0.0).bits(), 0x8000);
  EXPECT_TRUE(Bf16::FromDouble(std::nan("")).is_nan());
  EXPECT_EQ(Bf16::FromDouble(-1e300).bits(), 0xFF80);
}

TEST(Bf16Test, RoundingMatchesNeighbourSearch) {
  const double samples[] = {1.00390625, 1.0039, 3.14159265, -2.718281828, 1e-39, 3e-41,
                            9.1e-41,    6.5e4,  1.2345e-20, 0.75347900390625, 255.5, 256.5};
  for (const double x : samples) {
    EXPECT_EQ(Bf16::FromDouble(x).bits(), RoundByEnumeration(x)) << x;
  }
}

TEST(Bf16Test, TotalOrderPutsNegativeZeroFirst) {
  EXPECT_TRUE(bf16_total_less(Bf16::FromBits(0x8000), Bf16::Zero()));
  EXPECT_FALSE(bf16_total_less(Bf16::Zero(), Bf16::FromBits(0x8000)));
  EXPECT_TRUE(bf16_total_less(Bf16::FromDouble(-2), Bf16::FromDouble(-1)));
  EXPECT_TRUE(bf16_total_less(Bf16::FromDouble(1), Bf16::FromDouble(2)));
  EXPECT_FALSE(bf16_total_less(Bf16::One(), Bf16::One()));
}

TEST(Bf16Test, ArithmeticRoundsOnce) {
  const Bf16 a = Bf16::FromDouble(1.0078125);
  const Bf16 b = Bf16::FromDouble(1.0078125);
  EXPECT_EQ(bf16_mul(a, b).bits(), RoundByEnumeration(1.0078125 * 1.0078125));
  EXPECT_EQ(bf16_add(Bf16::One(), Bf16::FromDouble(0.00390625)).bits(), 0x3F80);
  EXPECT_EQ(bf16_sub(Bf16::One(), Bf16::One()).bits(), 0x0000);
  EXPECT_EQ(bf16_ulp(Bf16::One()), 0.0078125);
}

TEST(Bf16Test, FieldViews) {
  const Bf16 v = Bf16::FromDouble(-1.5);
  EXPECT_EQ(v.sign(), 1);
  EXPECT_EQ(v.exponent_field(), 127);
  EXPECT_EQ(v.mantissa_field(), 64);
  EXPECT_TRUE(Bf16::FromBits(0x0001).is_subnormal());
  EXPECT_EQ(v.ToHex(), "0xBFC0");
}

}  // namespace
}  // namespace softex
