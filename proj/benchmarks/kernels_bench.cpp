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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "softex/batch_io.hpp"
#include "softex/expu.hpp"
#include "softex/gelu.hpp"
#include "softex/softmax.hpp"

namespace {

using namespace softex;

std::vector<Bf16> Inputs(std::size_t n, double spread) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> dist(0.0, spread);
  std::vector<Bf16> v(n);
  for (Bf16& x : v) x = Bf16::FromDouble(dist(rng));
  return v;
}

void BM_Exps(benchmark::State& state) {
  const auto x = Inputs(4096, 10.0);
  for (auto _ : state) {
    for (const Bf16 v : x) benchmark::DoNotOptimize(exps(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Exps);

void BM_Expp(benchmark::State& state) {
  const auto x = Inputs(4096, 10.0);
  for (auto _ : state) {
    for (const Bf16 v : x) benchmark::DoNotOptimize(expp(v));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Expp);

void BM_Softmax(benchmark::State& state) {
  const auto x = Inputs(static_cast<std::size_t>(state.range(0)), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(softmax(x, 16));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Softmax)->Arg(128)->Arg(1024)->Arg(4096);

void BM_Gelu(benchmark::State& state) {
  SumExpParams p;
  p.terms = {{0.03624107854530191, 158.2676310468837},
             {0.09388324573987983, 7.934284183980176},
             {0.15607862855371202, 1.3676291950338464},
             {0.2106230348265843, 0.5637361496140095}};
  p.r_max = 0.006348024669044104;
  const auto x = Inputs(4096, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(gelu(x, p, static_cast<int>(state.range(0))));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_Gelu)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
