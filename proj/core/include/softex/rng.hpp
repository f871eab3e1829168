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

#ifndef SOFTEX_RNG_HPP_
#define SOFTEX_RNG_HPP_

#include <cstdint>
#include <random>
#include <string_view>

namespace softex {

// Every random consumer draws from its own named sub-stream of the run seed,
// so adding a consumer never shifts the draws of another.
std::uint64_t substream_seed(std::uint64_t seed, std::string_view stream_name);

inline std::mt19937_64 make_stream(std::uint64_t seed, std::string_view stream_name) {
  return std::mt19937_64(substream_seed(seed, stream_name));
}

// SplitMix64 finalizer; also used for counter-based per-trial seeding.
std::uint64_t mix64(std::uint64_t x);

}  // namespace softex

#endif  // SOFTEX_RNG_HPP_
