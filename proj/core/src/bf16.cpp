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

#include "softex/bf16.hpp"

#include <bit>
#include <cmath>
#include <cstdio>

namespace softex {

Bf16 Bf16::FromDouble(double x) {
  const std::uint16_t sign = std::signbit(x) ? kSignMask : 0;
  if (std::isnan(x)) return FromBits(sign | 0x7FC0);
  const double mag = std::fabs(x);
  if (std::isinf(mag)) return FromBits(sign | 0x7F80);
  if (mag == 0.0) return FromBits(sign);

  int exp2 = 0;
  const double frac = std::frexp(mag, &exp2);  // mag = frac * 2^exp2, frac in [0.5, 1)
  const int unbiased = exp2 - 1;
  if (unbiased >= -126) {
    // Eight significant bits; the scaled value is exact in double and
    // nearbyint rounds ties to even under the default environment.
    double q = std::nearbyint(std::ldexp(frac, 8));
    int e = unbiased;
    if (q == 256.0) {
      q = 128.0;
      ++e;
    }
    if (e > 127) return FromBits(sign | 0x7F80);
    const auto biased = static_cast<std::uint16_t>(e + kExponentBias);
    const auto mant = static_cast<std::uint16_t>(static_cast<int>(q) - 128);
    return FromBits(static_cast<std::uint16_t>(sign | (biased << 7) | mant));
  }
  // Subnormal range: units of 2^-133. A result of 128 units is the smallest
  // normal, whose pattern is the same integer.
  const double q = std::nearbyint(std::ldexp(mag, 133));
  return FromBits(static_cast<std::uint16_t>(sign | static_cast<int>(q)));
}

double Bf16::ToDouble() const { return static_cast<double>(ToFloat()); }

float Bf16::ToFloat() const {
  return std::bit_cast<float>(static_cast<std::uint32_t>(bits_) << 16);
}

std::string Bf16::ToHex() const {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "0x%04X", static_cast<unsigned>(bits_));
  return buf;
}

bool bf16_total_less(Bf16 a, Bf16 b) {
  const bool na = a.is_negative();
  const bool nb = b.is_negative();
  if (na != nb) return na;
  const auto ma = static_cast<std::uint16_t>(a.bits() & 0x7FFF);
  const auto mb = static_cast<std::uint16_t>(b.bits() & 0x7FFF);
  return na ? ma > mb : ma < mb;
}

// Sums and products of two Bf16 are computed in double and rounded once.
// Products are exact (8x8-bit significands). Sums can be inexact only when
// the exponent gap exceeds the double significand, in which case the small
// operand lies far below half an ulp of the Bf16 result and cannot flip it.
Bf16 bf16_add(Bf16 a, Bf16 b) { return Bf16::FromDouble(a.ToDouble() + b.ToDouble()); }
Bf16 bf16_sub(Bf16 a, Bf16 b) { return Bf16::FromDouble(a.ToDouble() - b.ToDouble()); }
Bf16 bf16_mul(Bf16 a, Bf16 b) { return Bf16::FromDouble(a.ToDouble() * b.ToDouble()); }

double bf16_ulp(Bf16 x) {
  const int e = x.exponent_field();
  if (e == 0) return std::ldexp(1.0, -133);
  return std::ldexp(1.0, e - Bf16::kExponentBias - Bf16::kMantissaBits);
}

}  // namespace softex
