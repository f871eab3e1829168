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

#ifndef SOFTEX_MESH_HPP_
#define SOFTEX_MESH_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace softex {

struct MeshConfig {
  std::uint32_t n = 8;                      // mesh side
  std::uint64_t trials = 1u << 16;
  double hop_delay_max = 0.5;               // cycles per transaction, U[0, max]
  std::uint64_t chunk_elems = 16384;        // 32 KiB of Bf16
  std::uint32_t link_bytes_per_cycle = 64;  // 512-bit channel
  double cluster_peak_gops = 430.0;
  double utilization = 0.80;
  double clock_ghz = 1.12;
  std::uint64_t seed = 1;

  // Throws ConfigError when n or trials is zero or a rate is non-positive.
  void Validate() const;
  // Link transactions needed to move one chunk.
  std::uint64_t transactions_per_chunk() const;
};

// GPT-2 XL sized layer, reduced to the per-chunk compute cost.
struct WorkloadSpec {
  std::uint32_t seq_len = 1024;
  std::uint32_t embedding = 1600;
  std::uint32_t heads = 25;
  std::uint32_t ffn = 6400;
  // Multiply-accumulates each chunk element takes part in inside one
  // cluster's output-stationary tile.
  std::uint32_t tile_inner = 112;

  void Validate() const;
  // Cycles a cluster spends computing on one chunk at the given utilization.
  double chunk_cycles(const MeshConfig& cfg) const;
};

struct MeshReport {
  std::uint32_t n = 0;
  double aggregate_gops = 0.0;
  double per_cluster_gops = 0.0;
  double noc_slowdown_fraction = 0.0;
  double required_dram_bandwidth = 0.0;  // GB/s
  double mean_path_delay = 0.0;          // cycles per transaction
  double path_delay_std = 0.0;
};

std::string to_json(const MeshConfig& cfg);
MeshConfig mesh_config_from_json(const std::string& text);

// Per-hop delay of edge `edge` in `trial`: counter-based, so any trial can
// be regenerated independently of the others.
double hop_delay(const MeshConfig& cfg, std::uint64_t trial, std::uint32_t edge);

// Longest monotone (right/down) path from the top-left to the bottom-right
// router for one trial, by dynamic programming.
double max_path_delay(const MeshConfig& cfg, std::uint64_t trial);

// Each trial delays the two inbound packets of a chunk window by D cycles
// per transaction; double buffering hides up to the no-contention transfer
// time of the window's four packets. Slowdown is the hidden-cost share of
// the mean window.
MeshReport simulate_mesh(const MeshConfig& cfg, const WorkloadSpec& w);
std::vector<MeshReport> mesh_sweep(std::span<const std::uint32_t> n_list, MeshConfig cfg,
                                   const WorkloadSpec& w);

struct PathStats {
  double mean = 0.0;
  double stddev = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t paths = 0;
};

// Enumerates every monotone path explicitly (n <= 4) with the same draws as
// max_path_delay. Throws DomainError for larger n.
PathStats path_delay_oracle(const MeshConfig& cfg);
// The dynamic-programming estimator over the same trials.
PathStats path_delay_estimate(const MeshConfig& cfg);

}  // namespace softex

#endif  // SOFTEX_MESH_HPP_
