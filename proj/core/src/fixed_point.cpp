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

#include "softex/fixed_point.hpp"

#include <cmath>
#include <string>

#include "softex/errors.hpp"

namespace softex {

namespace {

int CheckedBits(int bits) {
  if (bits < FixedAcc::kMinBits || bits > FixedAcc::kMaxBits) {
    throw DomainError("fixed-point width must be in [8, 16], got " +
                      std::to_string(bits));
  }
  return bits;
}

}  // namespace

FixedAcc::FixedAcc(int bits) : bits_(CheckedBits(bits)) {}

FixedAcc::FixedAcc(int bits, std::uint32_t raw) : bits_(CheckedBits(bits)), raw_(raw) {
  if (raw_ > max_raw()) throw DomainError("fixed-point raw value exceeds width");
}

FixedAcc FixedAcc::FromWide(double x, int bits) {
  CheckedBits(bits);
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("fixed-point conversion expects a value in [0, 1)");
  }
  return FixedAcc(bits, static_cast<std::uint32_t>(std::floor(std::ldexp(x, bits))));
}

double FixedAcc::ulp() const { return std::ldexp(1.0, -bits_); }

double FixedAcc::ToDouble() const { return std::ldexp(static_cast<double>(raw_), -bits_); }

Bf16 FixedAcc::ToBf16() const { return Bf16::FromDouble(ToDouble()); }

FixedAcc FixedAcc::SaturatingAdd(FixedAcc other) const {
  if (other.bits_ != bits_) throw DomainError("fixed-point width mismatch");
  const std::uint32_t sum = raw_ + other.raw_;
  return FixedAcc(bits_, sum > max_raw() ? max_raw() : sum);
}

void FixedAcc::AccumulateTruncated(double addend) {
  if (!(addend >= 0.0)) throw DomainError("lane accumulator addends must be non-negative");
  const double scaled = std::floor(std::ldexp(addend, bits_));
  const std::uint32_t code =
      scaled >= static_cast<double>(max_raw()) ? max_raw() : static_cast<std::uint32_t>(scaled);
  const std::uint32_t sum = raw_ + code;
  raw_ = sum > max_raw() ? max_raw() : sum;
}

}  // namespace softex
