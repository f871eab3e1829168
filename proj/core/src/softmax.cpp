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

#include "softex/softmax.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "softex/errors.hpp"

namespace softex {

float HardwarePolicy::Fma(float acc, float scale, float addend) const {
  return std::fma(acc, scale, addend);
}

SoftmaxState accumulate_chunk(SoftmaxState state, std::span<const Bf16> chunk,
                              std::size_t lanes, const ExppParams& params) {
  if (lanes == 0) throw DomainError("lane count must be at least 1");
  for (const Bf16 v : chunk) {
    if (!v.is_finite()) throw IngestError("softmax input contains NaN or infinity: " + v.ToHex());
  }
  HardwarePolicy policy{params};
  OnlineState<HardwarePolicy> online;
  online.running_max = state.running_max;
  online.denom = state.denom;
  online.elements_seen = state.elements_seen;
  OnlineAccumulate(policy, online, chunk, lanes);

  state.running_max = online.running_max;
  state.denom = online.denom;
  state.elements_seen = online.elements_seen;
  for (const auto& [from, to] : online.rescale_log) state.rescale_log.push_back({from, to});
  return state;
}

WideAcc reciprocal_seed(WideAcc d) {
  const std::uint32_t bits = std::bit_cast<std::uint32_t>(d);
  const int e = static_cast<int>((bits >> 23) & 0xFF);
  const std::uint32_t not_m = ~bits & 0x7FFFFF;
  const double f = std::ldexp(static_cast<double>(not_m), -23);
  // 2B - 1 - E is the biased exponent of the result.
  const double seed = (1.0 + f * f / 2.0) * std::ldexp(1.0, 127 - 1 - e);
  // The parabola is evaluated on the Bf16 mantissa width.
  return Bf16::FromDouble(seed).ToFloat();
}

WideAcc invert_denominator(WideAcc d) {
  if (!(d > 0.0f) || !std::isfinite(d) || !std::isnormal(d)) {
    throw DomainError("denominator must be positive, finite and normal");
  }
  float y = reciprocal_seed(d);
  for (int i = 0; i < 2; ++i) {
    const float t = std::fma(-d, y, 2.0f);
    y = y * t;
  }
  return y;
}

std::vector<Bf16> normalize_chunk(const SoftmaxState& state, std::span<const Bf16> chunk,
                                  Bf16 inv_den, const ExppParams& params) {
  std::vector<Bf16> out;
  out.reserve(chunk.size());
  for (const Bf16 x : chunk) {
    out.push_back(bf16_mul(expp(bf16_sub(x, state.running_max), params), inv_den));
  }
  return out;
}

SoftmaxResult softmax_with_state(std::span<const Bf16> x, std::size_t lanes,
                                 const ExppParams& params) {
  if (x.empty()) throw DomainError("softmax of an empty vector");
  SoftmaxResult result;
  result.state = accumulate_chunk(SoftmaxState{}, x, lanes, params);
  const Bf16 inv = Bf16::FromFloat(invert_denominator(result.state.denom));
  result.probs = normalize_chunk(result.state, x, inv, params);
  return result;
}

std::vector<Bf16> softmax(std::span<const Bf16> x, std::size_t lanes) {
  return softmax_with_state(x, lanes).probs;
}

std::vector<double> reference_softmax(std::span<const double> x,
                                      const std::function<double(double)>& exp_fn) {
  if (x.empty()) throw DomainError("softmax of an empty vector");
  const double m = *std::max_element(x.begin(), x.end());
  std::vector<double> out(x.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    out[i] = exp_fn(x[i] - m);
    sum += out[i];
  }
  for (double& v : out) v /= sum;
  return out;
}

double exp_oracle(double x) { return std::exp(x); }
double exps_of(double x) { return exps_wide(Bf16::FromDouble(x)); }
double expp_of(double x) { return expp_wide(Bf16::FromDouble(x)); }

RowReport evaluate_row(std::uint64_t row, std::span<const Bf16> x, std::size_t lanes) {
  const SoftmaxResult got = softmax_with_state(x, lanes);
  std::vector<double> wide(x.size());
  std::transform(x.begin(), x.end(), wide.begin(), [](Bf16 v) { return v.ToDouble(); });
  const std::vector<double> ref = reference_softmax(wide, exp_oracle);

  RowReport r;
  r.row = row;
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double y = got.probs[i].ToDouble();
    const double re = std::fabs(y - ref[i]) / ref[i];
    r.mre += re;
    r.max_re = std::max(r.max_re, re);
    sum += y;
  }
  r.mre /= static_cast<double>(x.size());
  r.sum_dev = sum - 1.0;
  Bf16 true_max = x[0];
  for (const Bf16 v : x) {
    if (bf16_total_less(true_max, v)) true_max = v;
  }
  r.max_exact = got.state.running_max == true_max;
  r.rescale_events = got.state.rescale_log.size();
  return r;
}

}  // namespace softex
