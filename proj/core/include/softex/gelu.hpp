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

#ifndef SOFTEX_GELU_HPP_
#define SOFTEX_GELU_HPP_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "softex/bf16.hpp"
#include "softex/fixed_point.hpp"

namespace softex {

struct SumExpTerm {
  double a = 0.0;
  double b = 0.0;
};

// Weights of s(x) = sum_i a_i exp(-b_i x^2) ~ Q(|x|). Terms are stored in
// the order the weight buffer is first streamed; alternate lane groups read
// it reversed.
struct SumExpParams {
  std::vector<SumExpTerm> terms;
  double r_max = 0.0;          // fit error, 0 when unknown
  std::string fit_meta = "{}";  // JSON object describing the fit

  std::size_t n_w() const { return terms.size(); }
  double sum_a() const;
  // Throws ConfigError unless every a_i, b_i > 0 and sum a_i <= 1/2.
  void Validate() const;
};

std::string to_json(const SumExpParams& p);
SumExpParams sum_exp_params_from_json(const std::string& text);

// Hardware kernel: x^2 and b_i * x^2 as Bf16 multiplies, expp per term, the
// a_i-weighted product truncated into an acc_bits fixed-point accumulator.
// `reversed` streams the weights back to front.
FixedAcc sum_exp_fixed(Bf16 x, const SumExpParams& p, int acc_bits, bool reversed = false);
Bf16 sum_exp(Bf16 x, const SumExpParams& p, int acc_bits = FixedAcc::kDefaultBits);

// Evaluates a batch the way lanes consume it: groups of `lanes` inputs, the
// weight buffer read forward for even groups and reversed for odd ones.
std::vector<Bf16> sum_exp_batch(std::span<const Bf16> x, const SumExpParams& p, int acc_bits,
                                std::size_t lanes);

// y = x * (1 - s) for a clear sign bit, x * s otherwise, in Bf16.
Bf16 gelu_scalar(Bf16 x, const SumExpParams& p, int acc_bits = FixedAcc::kDefaultBits);
std::vector<Bf16> gelu(std::span<const Bf16> x, const SumExpParams& p,
                       int acc_bits = FixedAcc::kDefaultBits);

// Same kernel, with the complement and final multiply done in single
// precision straight from the accumulator (no Bf16 rounding of s or y).
double gelu_wide(Bf16 x, const SumExpParams& p, int acc_bits = FixedAcc::kDefaultBits);

double gelu_tanh_baseline(double x);
double gelu_sigmoid_baseline(double x);

struct SweepRow {
  int bits = 0;
  int terms = 0;
  double max_abs_err = 0.0;
  double mean_abs_err = 0.0;
  double max_rel_err = 0.0;  // over points with |GELU(x)| >= 0.01
};

// Errors of gelu() against the exact GELU on `grid` evenly spaced Bf16
// points of [-6, 6], one row per (bits, terms) pair in the given order.
// Throws ConfigError when a term count has no parameter set.
std::vector<SweepRow> bits_terms_sweep(std::span<const int> acc_bits,
                                       std::span<const int> n_terms,
                                       const std::map<int, SumExpParams>& params,
                                       std::size_t grid);

}  // namespace softex

#endif  // SOFTEX_GELU_HPP_
