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

#ifndef SOFTEX_BF16_HPP_
#define SOFTEX_BF16_HPP_

#include <cstdint>
#include <string>

namespace softex {

// BFloat16 value held as its raw 16-bit pattern: 1 sign bit, 8 exponent bits
// (bias 127), 7 mantissa bits. Subnormals are represented; arithmetic helpers
// below round every result to nearest-even, the FPU default.
class Bf16 {
 public:
  static constexpr int kExponentBias = 127;
  static constexpr int kMantissaBits = 7;
  static constexpr std::uint16_t kSignMask = 0x8000;
  static constexpr std::uint16_t kExponentMask = 0x7F80;
  static constexpr std::uint16_t kMantissaMask = 0x007F;

  constexpr Bf16() = default;

  static constexpr Bf16 FromBits(std::uint16_t bits) {
    Bf16 v;
    v.bits_ = bits;
    return v;
  }
  static Bf16 FromDouble(double x);
  static Bf16 FromFloat(float x) { return FromDouble(static_cast<double>(x)); }

  static constexpr Bf16 Zero() { return FromBits(0x0000); }
  static constexpr Bf16 One() { return FromBits(0x3F80); }
  static constexpr Bf16 Infinity() { return FromBits(0x7F80); }
  static constexpr Bf16 NegInfinity() { return FromBits(0xFF80); }
  static constexpr Bf16 QuietNaN() { return FromBits(0x7FC0); }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr int sign() const { return bits_ >> 15; }
  constexpr int exponent_field() const { return (bits_ & kExponentMask) >> 7; }
  constexpr int mantissa_field() const { return bits_ & kMantissaMask; }

  constexpr bool is_nan() const {
    return exponent_field() == 0xFF && mantissa_field() != 0;
  }
  constexpr bool is_inf() const {
    return exponent_field() == 0xFF && mantissa_field() == 0;
  }
  constexpr bool is_finite() const { return exponent_field() != 0xFF; }
  constexpr bool is_zero() const { return (bits_ & 0x7FFF) == 0; }
  constexpr bool is_subnormal() const {
    return exponent_field() == 0 && mantissa_field() != 0;
  }
  constexpr bool is_negative() const { return sign() != 0; }

  // Exact: every Bf16 is representable in both float and double.
  double ToDouble() const;
  float ToFloat() const;

  constexpr Bf16 operator-() const { return FromBits(bits_ ^ kSignMask); }
  constexpr Bf16 Abs() const {
    return FromBits(static_cast<std::uint16_t>(bits_ & 0x7FFF));
  }

  friend constexpr bool operator==(Bf16 a, Bf16 b) { return a.bits_ == b.bits_; }

  std::string ToHex() const;

 private:
  std::uint16_t bits_ = 0;
};

// Round-to-nearest-even; overflow goes to infinity, NaN stays NaN.
inline Bf16 bf16_from_wide(double x) { return Bf16::FromDouble(x); }

// Total order on non-NaN values with -0 < +0.
bool bf16_total_less(Bf16 a, Bf16 b);

// Single-rounding Bf16 arithmetic, the behaviour of the per-lane MAU.
Bf16 bf16_add(Bf16 a, Bf16 b);
Bf16 bf16_sub(Bf16 a, Bf16 b);
Bf16 bf16_mul(Bf16 a, Bf16 b);

// Distance between x and the next Bf16 of larger magnitude, as a double.
double bf16_ulp(Bf16 x);

}  // namespace softex

#endif  // SOFTEX_BF16_HPP_
