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

#include "softex/batch_io.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <random>

#include "softex/errors.hpp"
#include "softex/rng.hpp"

namespace softex {

namespace {

constexpr std::array<char, 4> kMagic = {'B', 'F', '1', '6'};

std::uint32_t ReadU32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

}  // namespace

BatchMatrix read_batch(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError("cannot open batch file: " + path);
  const std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.size() < 12 || std::memcmp(data.data(), kMagic.data(), kMagic.size()) != 0) {
    throw IngestError("not a Bf16 batch file: " + path);
  }
  const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
  BatchMatrix m;
  m.rows = ReadU32(bytes + 4);
  m.cols = ReadU32(bytes + 8);
  const std::uint64_t count = static_cast<std::uint64_t>(m.rows) * m.cols;
  if (data.size() != 12 + 2 * count) {
    throw IngestError("batch file size does not match its header: " + path);
  }
  m.values.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const unsigned char* p = bytes + 12 + 2 * i;
    m.values.push_back(Bf16::FromBits(static_cast<std::uint16_t>(p[0] | (p[1] << 8))));
  }
  return m;
}

void write_batch(const std::string& path, const BatchMatrix& m) {
  if (m.values.size() != static_cast<std::size_t>(m.rows) * m.cols) {
    throw DomainError("batch matrix shape does not match its data");
  }
  std::string out(kMagic.begin(), kMagic.end());
  PutU32(out, m.rows);
  PutU32(out, m.cols);
  for (const Bf16 v : m.values) {
    out.push_back(static_cast<char>(v.bits() & 0xFF));
    out.push_back(static_cast<char>(v.bits() >> 8));
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IngestError("cannot write batch file: " + path);
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
}

BatchMatrix normal_batch(std::uint32_t rows, std::uint32_t cols, std::uint64_t seed) {
  std::mt19937_64 rng = make_stream(seed, "softmax.scores");
  std::normal_distribution<double> dist(0.0, 1.0);
  BatchMatrix m{rows, cols, {}};
  m.values.reserve(static_cast<std::size_t>(rows) * cols);
  for (std::size_t i = 0; i < static_cast<std::size_t>(rows) * cols; ++i) {
    m.values.push_back(Bf16::FromDouble(dist(rng)));
  }
  return m;
}

}  // namespace softex
