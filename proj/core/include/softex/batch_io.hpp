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

#ifndef SOFTEX_BATCH_IO_HPP_
#define SOFTEX_BATCH_IO_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "softex/bf16.hpp"

namespace softex {

// Row-major matrix of Bf16 scores.
//
// File layout, all little-endian:
//   4 bytes   magic "BF16"
//   uint32    rows
//   uint32    cols
//   rows*cols uint16 bit patterns
struct BatchMatrix {
  std::uint32_t rows = 0;
  std::uint32_t cols = 0;
  std::vector<Bf16> values;

  std::span<const Bf16> row(std::uint32_t r) const {
    return std::span<const Bf16>(values).subspan(static_cast<std::size_t>(r) * cols, cols);
  }
};

// Throws IngestError on a short, truncated or mislabeled file.
BatchMatrix read_batch(const std::string& path);
void write_batch(const std::string& path, const BatchMatrix& m);

// Standard-normal scores rounded to Bf16; the attention-score proxy.
BatchMatrix normal_batch(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed);

}  // namespace softex

#endif  // SOFTEX_BATCH_IO_HPP_
