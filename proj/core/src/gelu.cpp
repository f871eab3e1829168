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

#include "softex/gelu.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "softex/errors.hpp"
#include "softex/expu.hpp"
#include "softex/qfunction.hpp"

namespace softex {

double SumExpParams::sum_a() const {
  return std::accumulate(terms.begin(), terms.end(), 0.0,
                         [](double s, const SumExpTerm& t) { return s + t.a; });
}

void SumExpParams::Validate() const {
  if (terms.empty()) throw ConfigError("sum-of-exponentials needs at least one term");
  for (const SumExpTerm& t : terms) {
    if (!(t.a > 0.0) || !(t.b > 0.0)) throw ConfigError("a_i and b_i must be positive");
  }
  if (sum_a() > 0.5) throw ConfigError("sum of a_i exceeds 1/2");
}

namespace {

void CheckBits(int acc_bits) {
  if (acc_bits < FixedAcc::kMinBits || acc_bits > FixedAcc::kMaxBits) {
    throw DomainError("accumulator width must be in [8, 16]");
  }
}

}  // namespace

FixedAcc sum_exp_fixed(Bf16 x, const SumExpParams& p, int acc_bits, bool reversed) {
  CheckBits(acc_bits);
  FixedAcc acc(acc_bits);
  const Bf16 xsq = bf16_mul(x, x);
  const std::size_t n = p.terms.size();
  for (std::size_t k = 0; k < n; ++k) {
    const SumExpTerm& t = p.terms[reversed ? n - 1 - k : k];
    const Bf16 arg = bf16_mul(Bf16::FromDouble(t.b), xsq);
    const Bf16 e = expp(-arg);
    // FP32 weight times a Bf16 exponential is exact in double.
    const double product = static_cast<double>(static_cast<float>(t.a)) * e.ToDouble();
    acc.AccumulateTruncated(product);
  }
  return acc;
}

Bf16 sum_exp(Bf16 x, const SumExpParams& p, int acc_bits) {
  return sum_exp_fixed(x, p, acc_bits).ToBf16();
}

std::vector<Bf16> sum_exp_batch(std::span<const Bf16> x, const SumExpParams& p, int acc_bits,
                                std::size_t lanes) {
  if (lanes == 0) throw DomainError("lane count must be at least 1");
  std::vector<Bf16> out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool reversed = (i / lanes) % 2 == 1;
    out.push_back(sum_exp_fixed(x[i], p, acc_bits, reversed).ToBf16());
  }
  return out;
}

Bf16 gelu_scalar(Bf16 x, const SumExpParams& p, int acc_bits) {
  const Bf16 s = sum_exp(x, p, acc_bits);
  if (x.sign() == 0) return bf16_mul(x, bf16_sub(Bf16::One(), s));
  return bf16_mul(x, s);
}

std::vector<Bf16> gelu(std::span<const Bf16> x, const SumExpParams& p, int acc_bits) {
  std::vector<Bf16> out;
  out.reserve(x.size());
  for (const Bf16 v : x) out.push_back(gelu_scalar(v, p, acc_bits));
  return out;
}

double gelu_wide(Bf16 x, const SumExpParams& p, int acc_bits) {
  const float s = static_cast<float>(sum_exp_fixed(x, p, acc_bits).ToDouble());
  const float xf = x.ToFloat();
  if (x.sign() == 0) return static_cast<double>(xf * (1.0f - s));
  return static_cast<double>(xf * s);
}

double gelu_tanh_baseline(double x) {
  constexpr double kC = 0.7978845608028654;  // sqrt(2/pi)
  return 0.5 * x * (1.0 + std::tanh(kC * (x + 0.044715 * x * x * x)));
}

double gelu_sigmoid_baseline(double x) { return x / (1.0 + std::exp(-1.702 * x)); }

std::vector<SweepRow> bits_terms_sweep(std::span<const int> acc_bits,
                                       std::span<const int> n_terms,
                                       const std::map<int, SumExpParams>& params,
                                       std::size_t grid) {
  if (grid < 2) throw ConfigError("sweep grid needs at least two points");
  std::vector<Bf16> xs(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    xs[i] = Bf16::FromDouble(-6.0 + 12.0 * static_cast<double>(i) / static_cast<double>(grid - 1));
  }
  std::vector<SweepRow> rows;
  for (const int bits : acc_bits) {
    for (const int terms : n_terms) {
      const auto it = params.find(terms);
      if (it == params.end()) {
        throw ConfigError("no parameter set for " + std::to_string(terms) + " terms");
      }
      SweepRow row{bits, terms, 0.0, 0.0, 0.0};
      for (const Bf16 x : xs) {
        const double ref = gelu_exact(x.ToDouble());
        const double err = std::fabs(gelu_scalar(x, it->second, bits).ToDouble() - ref);
        row.max_abs_err = std::max(row.max_abs_err, err);
        row.mean_abs_err += err;
        if (std::fabs(ref) >= 0.01) row.max_rel_err = std::max(row.max_rel_err, err / std::fabs(ref));
      }
      row.mean_abs_err /= static_cast<double>(grid);
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace softex
