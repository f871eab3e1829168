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

#ifndef SOFTEX_PERF_MODEL_HPP_
#define SOFTEX_PERF_MODEL_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace softex {

// Cycle model of the datapath. Defaults are calibrated so that a 128x128
// softmax lands near 14.2 kcycles with 16 lanes.
struct SoftexConfig {
  std::uint32_t lanes = 16;
  std::uint32_t acc_pipeline_depth = 3;
  std::uint32_t rescale_stall_cycles = 12;  // per new-maximum event
  std::uint32_t newton_cycles = 13;         // seed + two Newton steps
  std::uint32_t datapath_latency = 7;       // MAU + EXPU stages

  // Throws ConfigError unless lanes is one of 4, 8, 16, 32, 64.
  void Validate() const;
  // Elements per cycle of the N x 16-bit memory interface.
  std::uint32_t bandwidth() const { return lanes; }
  // Cycles to flush the FP32 accumulator after the last beat.
  std::uint64_t drain_cycles() const;
};

std::string to_json(const SoftexConfig& cfg);
SoftexConfig softex_config_from_json(const std::string& text);

// Expected number of new-maximum events in a random sequence, round(ln len).
std::uint64_t expected_rescale_events(std::uint64_t len);

// Accumulation ceil(len/N) + stalls + drain, inversion, then normalization
// at half bandwidth since loads and stores alternate.
std::uint64_t softmax_cycles(std::uint64_t len, std::uint64_t rescale_events,
                             const SoftexConfig& cfg);

// ceil(len/N) groups each held for n_w weight beats, plus pipeline fill.
std::uint64_t sumexp_cycles(std::uint64_t len, std::uint64_t n_w, const SoftexConfig& cfg);

struct LatencyRow {
  std::uint32_t lanes = 0;
  std::uint64_t len = 0;
  std::string kernel;  // "softmax" or "sumexp"
  std::uint64_t cycles = 0;
  double throughput_elems_per_cycle = 0.0;
};

enum class Kernel { kSoftmax, kSumExp };
std::string to_string(Kernel k);

// One row per (len, lanes) pair. Softmax uses the expected rescale count,
// sumexp holds each group for n_w weight beats.
std::vector<LatencyRow> lane_sweep(std::span<const std::uint64_t> lens,
                                   std::span<const std::uint32_t> lane_set,
                                   const SoftexConfig& cfg, Kernel kernel = Kernel::kSoftmax,
                                   std::uint64_t n_w = 4);

}  // namespace softex

#endif  // SOFTEX_PERF_MODEL_HPP_
