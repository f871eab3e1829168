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

#ifndef SOFTEX_SOFTMAX_HPP_
#define SOFTEX_SOFTMAX_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "softex/bf16.hpp"
#include "softex/expu.hpp"
#include "softex/online.hpp"

namespace softex {

// Single-precision accumulator of the datapath.
using WideAcc = float;

struct RescaleEvent {
  Bf16 old_max;
  Bf16 new_max;
};

struct SoftmaxState {
  Bf16 running_max = Bf16::NegInfinity();
  WideAcc denom = 0.0f;
  std::vector<RescaleEvent> rescale_log;
  std::uint64_t elements_seen = 0;
};

// Arithmetic of the hardware datapath: Bf16 subtraction, expp, FP32 tree
// and FP32 fused multiply-add for the rescale.
struct HardwarePolicy {
  using Elem = Bf16;
  using Sum = float;

  ExppParams params = ExppParams::Published();

  Bf16 Sub(Bf16 a, Bf16 b) const { return bf16_sub(a, b); }
  float Exp(Bf16 x) const { return expp(x, params).ToFloat(); }
  float Zero() const { return 0.0f; }
  float Add(float a, float b) const { return a + b; }
  float Fma(float acc, float scale, float addend) const;
  bool Less(Bf16 a, Bf16 b) const { return bf16_total_less(a, b); }
};

// Consumes one chunk in groups of `lanes` elements. Throws IngestError on
// NaN or infinite elements and DomainError when lanes == 0.
SoftmaxState accumulate_chunk(SoftmaxState state, std::span<const Bf16> chunk,
                              std::size_t lanes,
                              const ExppParams& params = ExppParams::Published());

// Exponent-complement seed with a parabolic mantissa estimate, then two
// Newton steps in single precision. Throws DomainError unless d is positive,
// finite and normal.
WideAcc invert_denominator(WideAcc d);

// The seed alone, for inspection.
WideAcc reciprocal_seed(WideAcc d);

// expp(x - running_max) * inv_den with one Bf16 multiply per element.
std::vector<Bf16> normalize_chunk(const SoftmaxState& state, std::span<const Bf16> chunk,
                                  Bf16 inv_den,
                                  const ExppParams& params = ExppParams::Published());

struct SoftmaxResult {
  std::vector<Bf16> probs;
  SoftmaxState state;
};

std::vector<Bf16> softmax(std::span<const Bf16> x, std::size_t lanes);
SoftmaxResult softmax_with_state(std::span<const Bf16> x, std::size_t lanes,
                                 const ExppParams& params = ExppParams::Published());

// Two-pass softmax at double precision with a pluggable exponential.
std::vector<double> reference_softmax(std::span<const double> x,
                                      const std::function<double(double)>& exp_fn);

// Exponentials suitable for reference_softmax.
double exp_oracle(double x);
double exps_of(double x);
double expp_of(double x);

// Per-row accuracy of the datapath softmax against the exact softmax of the
// same Bf16 inputs.
struct RowReport {
  std::uint64_t row = 0;
  double mre = 0.0;
  double max_re = 0.0;
  double sum_dev = 0.0;  // sum(outputs) - 1
  bool max_exact = false;
  std::uint64_t rescale_events = 0;
};

RowReport evaluate_row(std::uint64_t row, std::span<const Bf16> x, std::size_t lanes);

}  // namespace softex

#endif  // SOFTEX_SOFTMAX_HPP_
