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

#ifndef SOFTEX_EXPU_HPP_
#define SOFTEX_EXPU_HPP_

#include <cstdint>
#include <string>

#include "softex/bf16.hpp"

namespace softex {

// A constant stored as an integer code with a power-of-two scale:
// value = code * 2^-frac_bits.
struct DyadicConstant {
  std::int32_t code = 0;
  int frac_bits = 0;

  double value() const;
  friend bool operator==(const DyadicConstant&, const DyadicConstant&) = default;
};

// Mantissa-correction constants of expp. The lower half of the fraction
// range uses alpha*f*(f + gamma1), the upper half
// not(beta*not(f)*(f + gamma2)).
class ExppParams {
 public:
  // Throws DomainError unless alpha, beta in (0,1) and gamma1, gamma2 in (0,4).
  ExppParams(DyadicConstant alpha, DyadicConstant beta, DyadicConstant gamma1,
             DyadicConstant gamma2);

  // alpha = 7*2^-5, beta = 7*2^-4, gamma1 = 211*2^-6, gamma2 = 139*2^-6.
  static ExppParams Published();

  const DyadicConstant& alpha() const { return alpha_; }
  const DyadicConstant& beta() const { return beta_; }
  const DyadicConstant& gamma1() const { return gamma1_; }
  const DyadicConstant& gamma2() const { return gamma2_; }

  // True when both correction branches stay inside 7 bits for every input
  // fraction, i.e. the masking in correct_mantissa never discards a carry.
  bool FitsDatapath() const;

  friend bool operator==(const ExppParams&, const ExppParams&) = default;

 private:
  DyadicConstant alpha_;
  DyadicConstant beta_;
  DyadicConstant gamma1_;
  DyadicConstant gamma2_;
};

// Fixed-point 1/ln2 used by the shift datapath: round(2^16 / ln 2).
inline constexpr int kInvLn2FracBits = 16;
inline constexpr std::int64_t kInvLn2Code = 94548;

// Result of the integer stage shared by exps and expp: the 16-bit pattern
// m_sh = floor(x / ln2 * 2^7) + (127 << 7), before reinterpretation.
struct ShiftedExponent {
  enum class Kind { kFinite, kOverflow, kUnderflow, kNaN };
  Kind kind = Kind::kFinite;
  std::int64_t m_sh = 0;

  int fraction() const { return static_cast<int>(m_sh & 0x7F); }
  // Biased exponent field, floor(m_sh / 128); may be <= 0 near underflow.
  std::int64_t exponent() const { return m_sh >> 7; }
};

// Integer multiply-shift of the Bf16 input by 1/ln2. Subnormal inputs are
// flushed to zero. |x| >= 512 and |m_sh| >= 2^16 take the overflow branch
// (+inf for positive x, 0 for negative x); patterns at or above the infinity
// encoding overflow as well.
ShiftedExponent shift_exponent(Bf16 x);

// 7-bit correction of the fraction bits. frac must be in [0, 127].
int correct_mantissa(int frac, const ExppParams& params);

// Schraudolph's exponential on Bf16. NaN -> NaN, -inf -> 0, +inf -> +inf.
// Results below the normal range are rounded to the nearest Bf16
// (gradual underflow) from the value 2^(E-127) * (1 + frac/128).
Bf16 exps(Bf16 x);
Bf16 expp(Bf16 x, const ExppParams& params = ExppParams::Published());

// The same datapaths returning 2^(E-127) * (1 + frac/128) in double before
// packing into 16 bits. Identical to the Bf16 results whenever those are
// normal; used for accuracy statistics near the underflow boundary.
double exps_wide(Bf16 x);
double expp_wide(Bf16 x, const ExppParams& params = ExppParams::Published());

struct ExppFitResult {
  ExppParams params;
  double mre;            // on the fit's internal sample set
  double seed_mre;       // the analytic starting tuple, same sample set
  std::uint64_t accepted;
};

// Monte Carlo search over hardware-encodable tuples (alpha on 2^-5, beta on
// 2^-4, gammas on 2^-6 with 8-bit codes). Trial 0 evaluates the analytic
// tangent-parabola seed; later trials perturb the incumbent and keep strict
// improvements. Deterministic given seed.
ExppFitResult fit_expp_params(std::uint64_t trials, std::uint64_t seed);

// The analytic starting tuple used by fit_expp_params.
ExppParams analytic_expp_seed();

// Mean relative error of expp with the given constants on the fit's fixed
// sample set. Lets callers compare tuples on the objective the search uses.
double expp_fit_objective(const ExppParams& params);

std::string to_json(const ExppParams& params);
ExppParams expp_params_from_json(const std::string& text);

}  // namespace softex

#endif  // SOFTEX_EXPU_HPP_
