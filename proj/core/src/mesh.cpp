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

#include "softex/mesh.hpp"

#include <algorithm>
#include <cmath>

#include "softex/errors.hpp"
#include "softex/rng.hpp"

namespace softex {

void MeshConfig::Validate() const {
  if (n == 0) throw ConfigError("mesh side must be at least 1");
  if (trials == 0) throw ConfigError("trial count must be at least 1");
  if (!(hop_delay_max >= 0.0)) throw ConfigError("hop delay bound must be non-negative");
  if (chunk_elems == 0 || link_bytes_per_cycle == 0) throw ConfigError("chunk and link sizes must be positive");
  if (!(cluster_peak_gops > 0.0) || !(clock_ghz > 0.0)) throw ConfigError("peak and clock must be positive");
  if (!(utilization > 0.0) || utilization > 1.0) throw ConfigError("utilization must be in (0, 1]");
}

std::uint64_t MeshConfig::transactions_per_chunk() const {
  return (chunk_elems * 2 + link_bytes_per_cycle - 1) / link_bytes_per_cycle;
}

void WorkloadSpec::Validate() const {
  if (seq_len == 0 || embedding == 0 || heads == 0 || ffn == 0 || tile_inner == 0) {
    throw ConfigError("workload dimensions must be positive");
  }
}

double WorkloadSpec::chunk_cycles(const MeshConfig& cfg) const {
  const double ops = 2.0 * static_cast<double>(cfg.chunk_elems) * tile_inner;
  const double ops_per_cycle = cfg.cluster_peak_gops * cfg.utilization / cfg.clock_ghz;
  return ops / ops_per_cycle;
}

namespace {

// Right edges are numbered row-major first, then down edges.
std::uint32_t RightEdge(std::uint32_t n, std::uint32_t i, std::uint32_t j) { return i * (n - 1) + j; }
std::uint32_t DownEdge(std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  return n * (n - 1) + i * n + j;
}

PathStats Summarize(const std::vector<double>& d, std::uint64_t paths) {
  PathStats s;
  s.trials = d.size();
  s.paths = paths;
  double sum = 0.0;
  for (const double v : d) sum += v;
  s.mean = sum / static_cast<double>(d.size());
  double var = 0.0;
  for (const double v : d) var += (v - s.mean) * (v - s.mean);
  s.stddev = d.size() > 1 ? std::sqrt(var / static_cast<double>(d.size() - 1)) : 0.0;
  s.std_error = s.stddev / std::sqrt(static_cast<double>(d.size()));
  return s;
}

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

double hop_delay(const MeshConfig& cfg, std::uint64_t trial, std::uint32_t edge) {
  const std::uint64_t base = substream_seed(cfg.seed, "mesh.hop_delay");
  const std::uint64_t word = mix64(base ^ mix64((trial << 20) ^ edge));
  const double u = std::ldexp(static_cast<double>(word >> 11), -53);
  return u * cfg.hop_delay_max;
}

double max_path_delay(const MeshConfig& cfg, std::uint64_t trial) {
  const std::uint32_t n = cfg.n;
  if (n == 1) return 0.0;
  std::vector<double> row(n, 0.0);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      double best = -1.0;
      if (j > 0) best = std::max(best, row[j - 1] + hop_delay(cfg, trial, RightEdge(n, i, j - 1)));
      if (i > 0) best = std::max(best, row[j] + hop_delay(cfg, trial, DownEdge(n, i - 1, j)));
      row[j] = best;
    }
  }
  return row[n - 1];
}

PathStats path_delay_estimate(const MeshConfig& cfg) {
  cfg.Validate();
  std::vector<double> d(cfg.trials);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) d[t] = max_path_delay(cfg, t);
  return Summarize(d, Binomial(2 * (cfg.n - 1), cfg.n - 1));
}

PathStats path_delay_oracle(const MeshConfig& cfg) {
  cfg.Validate();
  const std::uint32_t n = cfg.n;
  if (n > 4) throw DomainError("path enumeration is limited to n <= 4");
  const std::uint32_t steps = 2 * (n - 1);
  // A path is a bit mask over its steps; set bits move down.
  std::vector<std::uint32_t> paths;
  for (std::uint32_t mask = 0; mask < (1u << steps); ++mask) {
    if (static_cast<std::uint32_t>(__builtin_popcount(mask)) == n - 1) paths.push_back(mask);
  }
  std::vector<double> d(cfg.trials);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    double best = 0.0;
    for (const std::uint32_t mask : paths) {
      std::uint32_t i = 0, j = 0;
      double sum = 0.0;
      for (std::uint32_t s = 0; s < steps; ++s) {
        if (mask & (1u << s)) {
          sum += hop_delay(cfg, t, DownEdge(n, i, j));
          ++i;
        } else {
          sum += hop_delay(cfg, t, RightEdge(n, i, j));
          ++j;
        }
      }
      best = std::max(best, sum);
    }
    d[t] = best;
  }
  return Summarize(d, paths.size());
}

MeshReport simulate_mesh(const MeshConfig& cfg, const WorkloadSpec& w) {
  cfg.Validate();
  w.Validate();
  const double t_chunk = w.chunk_cycles(cfg);
  const double per_packet = static_cast<double>(cfg.transactions_per_chunk());
  // Two packets arrive per window; four packets fit in the hidden window.
  const double inbound = 2.0 * per_packet;
  const double hidden = 4.0 * per_packet;

  const PathStats stats = path_delay_estimate(cfg);
  double extra = 0.0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    extra += std::max(0.0, inbound * max_path_delay(cfg, t) - hidden);
  }
  extra /= static_cast<double>(cfg.trials);

  MeshReport r;
  r.n = cfg.n;
  r.noc_slowdown_fraction = extra / (t_chunk + extra);
  r.per_cluster_gops = cfg.cluster_peak_gops * cfg.utilization * (1.0 - r.noc_slowdown_fraction);
  r.aggregate_gops = r.per_cluster_gops * cfg.n * cfg.n;
  // Weights enter at the top of each of the n columns; one activation chunk
  // enters at the corner and is forwarded along the mesh.
  const double bytes_per_window = (cfg.n + 1.0) * static_cast<double>(cfg.chunk_elems) * 2.0;
  const double window_seconds = (t_chunk + extra) / (cfg.clock_ghz * 1e9);
  r.required_dram_bandwidth = bytes_per_window / window_seconds / 1e9;
  r.mean_path_delay = stats.mean;
  r.path_delay_std = stats.stddev;
  return r;
}

std::vector<MeshReport> mesh_sweep(std::span<const std::uint32_t> n_list, MeshConfig cfg,
                                   const WorkloadSpec& w) {
  std::vector<MeshReport> out;
  for (const std::uint32_t n : n_list) {
    cfg.n = n;
    out.push_back(simulate_mesh(cfg, w));
  }
  return out;
}

}  // namespace softex
