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

#include "softex/perf_model.hpp"

#include <bit>
#include <cmath>

#include "softex/errors.hpp"

namespace softex {

namespace {

std::uint64_t CeilDiv(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

}  // namespace

void SoftexConfig::Validate() const {
  switch (lanes) {
    case 4: case 8: case 16: case 32: case 64: break;
    default: throw ConfigError("lanes must be one of 4, 8, 16, 32, 64");
  }
}

std::uint64_t SoftexConfig::drain_cycles() const {
  // Adder tree depth plus the in-flight partial sums of the accumulator.
  const auto tree = static_cast<std::uint64_t>(std::bit_width(lanes - 1u));
  return datapath_latency + acc_pipeline_depth + tree;
}

std::uint64_t expected_rescale_events(std::uint64_t len) {
  if (len == 0) return 0;
  return static_cast<std::uint64_t>(std::llround(std::log(static_cast<double>(len))));
}

std::uint64_t softmax_cycles(std::uint64_t len, std::uint64_t rescale_events,
                             const SoftexConfig& cfg) {
  cfg.Validate();
  if (len == 0) throw DomainError("softmax_cycles needs len >= 1");
  const std::uint64_t beats = CeilDiv(len, cfg.lanes);
  const std::uint64_t accumulate =
      beats + rescale_events * cfg.rescale_stall_cycles + cfg.drain_cycles();
  return accumulate + cfg.newton_cycles + 2 * beats;
}

std::uint64_t sumexp_cycles(std::uint64_t len, std::uint64_t n_w, const SoftexConfig& cfg) {
  cfg.Validate();
  if (len == 0 || n_w == 0) throw DomainError("sumexp_cycles needs len >= 1 and n_w >= 1");
  return CeilDiv(len, cfg.lanes) * n_w + cfg.datapath_latency + 1;
}

std::string to_string(Kernel k) { return k == Kernel::kSoftmax ? "softmax" : "sumexp"; }

std::vector<LatencyRow> lane_sweep(std::span<const std::uint64_t> lens,
                                   std::span<const std::uint32_t> lane_set,
                                   const SoftexConfig& cfg, Kernel kernel, std::uint64_t n_w) {
  std::vector<LatencyRow> rows;
  for (const std::uint64_t len : lens) {
    for (const std::uint32_t lanes : lane_set) {
      SoftexConfig c = cfg;
      c.lanes = lanes;
      const std::uint64_t cycles = kernel == Kernel::kSoftmax
                                       ? softmax_cycles(len, expected_rescale_events(len), c)
                                       : sumexp_cycles(len, n_w, c);
      rows.push_back({lanes, len, to_string(kernel), cycles,
                      static_cast<double>(len) / static_cast<double>(cycles)});
    }
  }
  return rows;
}

}  // namespace softex
