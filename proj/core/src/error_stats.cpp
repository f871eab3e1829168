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

#include "softex/error_stats.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "softex/errors.hpp"
#include "softex/expu.hpp"
#include "softex/rng.hpp"

namespace softex {

namespace {

void CheckRange(double lo, double hi, std::uint64_t n) {
  if (!(lo < hi)) throw DomainError("error_stats needs lo < hi");
  if (n == 0) throw DomainError("error_stats needs at least one sample");
}

struct Running {
  double sum = 0.0;
  double max = 0.0;
  std::uint64_t n = 0;

  void Add(double approx, double ref) {
    const double re = std::fabs(approx - ref) / ref;
    sum += re;
    max = std::max(max, re);
    ++n;
  }
  ErrorStats Finish() const {
    return {n ? sum / static_cast<double>(n) : 0.0, max, n};
  }
};

bool UsableReference(double ref) { return ref > 0.0 && std::isfinite(ref); }

}  // namespace

ErrorStats error_stats(const std::function<double(Bf16)>& f, double lo, double hi,
                       std::uint64_t n, std::uint64_t seed) {
  CheckRange(lo, hi, n);
  std::mt19937_64 rng = make_stream(seed, "expu.error_stats");
  std::uniform_real_distribution<double> dist(lo, hi);
  Running acc;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Bf16 x = Bf16::FromDouble(dist(rng));
    const double ref = std::exp(x.ToDouble());
    if (!UsableReference(ref)) continue;
    acc.Add(f(x), ref);
  }
  return acc.Finish();
}

ErrorStats error_stats_bf16(const std::function<Bf16(Bf16)>& f, double lo, double hi,
                            std::uint64_t n, std::uint64_t seed) {
  return error_stats([&f](Bf16 x) { return f(x).ToDouble(); }, lo, hi, n, seed);
}

ExpComparison compare_exponentials(double lo, double hi, std::uint64_t n, std::uint64_t seed) {
  CheckRange(lo, hi, n);
  std::mt19937_64 rng = make_stream(seed, "expu.error_stats");
  std::uniform_real_distribution<double> dist(lo, hi);
  const ExppParams params = ExppParams::Published();
  Running s, p;
  for (std::uint64_t i = 0; i < n; ++i) {
    const Bf16 x = Bf16::FromDouble(dist(rng));
    const double ref = std::exp(x.ToDouble());
    if (!UsableReference(ref)) continue;
    s.Add(exps_wide(x), ref);
    p.Add(expp_wide(x, params), ref);
  }
  return {s.Finish(), p.Finish()};
}

}  // namespace softex
