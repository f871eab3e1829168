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

#ifndef SOFTEX_ERROR_STATS_HPP_
#define SOFTEX_ERROR_STATS_HPP_

#include <cstdint>
#include <functional>

#include "softex/bf16.hpp"

namespace softex {

struct ErrorStats {
  double mre = 0.0;     // mean relative error
  double max_re = 0.0;  // maximum relative error
  std::uint64_t n = 0;  // samples counted
};

// Draws n doubles uniformly from [lo, hi], rounds each to Bf16 and compares
// f(x) against std::exp of the exact Bf16 value. Samples whose reference
// is zero or infinite are skipped. Deterministic given seed.
ErrorStats error_stats(const std::function<double(Bf16)>& f, double lo, double hi,
                       std::uint64_t n, std::uint64_t seed);

// Convenience overload for functions producing Bf16.
ErrorStats error_stats_bf16(const std::function<Bf16(Bf16)>& f, double lo, double hi,
                            std::uint64_t n, std::uint64_t seed);

// Paired statistics for exps and expp on one shared sample set, measured on
// the datapath values before 16-bit packing.
struct ExpComparison {
  ErrorStats exps;
  ErrorStats expp;
};
ExpComparison compare_exponentials(double lo, double hi, std::uint64_t n, std::uint64_t seed);

}  // namespace softex

#endif  // SOFTEX_ERROR_STATS_HPP_
