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

#ifndef SOFTEX_FIXED_POINT_HPP_
#define SOFTEX_FIXED_POINT_HPP_

#include <cstdint>

#include "softex/bf16.hpp"

namespace softex {

// Unsigned fixed-point lane accumulator value with `bits` fractional bits
// and no integer part: raw r represents r * 2^-bits in [0, 1 - 2^-bits].
// Conversions truncate toward zero; additions saturate at the top code.
class FixedAcc {
 public:
  static constexpr int kMinBits = 8;
  static constexpr int kMaxBits = 16;
  static constexpr int kDefaultBits = 14;

  explicit FixedAcc(int bits = kDefaultBits);
  FixedAcc(int bits, std::uint32_t raw);

  // floor(x * 2^bits). Throws DomainError unless 0 <= x < 1.
  static FixedAcc FromWide(double x, int bits = kDefaultBits);

  int bits() const { return bits_; }
  std::uint32_t raw() const { return raw_; }
  std::uint32_t max_raw() const { return (1u << bits_) - 1; }
  double ulp() const;
  double ToDouble() const;
  bool saturated() const { return raw_ == max_raw(); }

  // Nearest Bf16 to raw * 2^-bits.
  Bf16 ToBf16() const;

  // Saturating add; both operands must share the bit width.
  FixedAcc SaturatingAdd(FixedAcc other) const;
  // Truncates a non-negative addend into this format and adds it. Addends of
  // one or more are clamped to the top code rather than rejected, matching a
  // saturating hardware adder.
  void AccumulateTruncated(double addend);

  friend bool operator==(FixedAcc a, FixedAcc b) {
    return a.bits_ == b.bits_ && a.raw_ == b.raw_;
  }

 private:
  int bits_;
  std::uint32_t raw_ = 0;
};

using Fixed14 = FixedAcc;

inline FixedAcc fixed14_from_wide(double x) {
  return FixedAcc::FromWide(x, FixedAcc::kDefaultBits);
}
inline Bf16 fixed14_to_bf16(FixedAcc v) { return v.ToBf16(); }

}  // namespace softex

#endif  // SOFTEX_FIXED_POINT_HPP_
