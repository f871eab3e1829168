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

#include "softex/expu.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "softex/errors.hpp"
#include "softex/rng.hpp"

namespace softex {

double DyadicConstant::value() const { return std::ldexp(static_cast<double>(code), -frac_bits); }

ExppParams::ExppParams(DyadicConstant alpha, DyadicConstant beta, DyadicConstant gamma1,
                       DyadicConstant gamma2)
    : alpha_(alpha), beta_(beta), gamma1_(gamma1), gamma2_(gamma2) {
  auto in_open = [](const DyadicConstant& c, double hi) {
    return c.code > 0 && c.frac_bits >= 0 && c.frac_bits <= 16 && c.value() < hi;
  };
  if (!in_open(alpha_, 1.0) || !in_open(beta_, 1.0)) {
    throw DomainError("expp alpha and beta must lie in (0, 1)");
  }
  if (!in_open(gamma1_, 4.0) || !in_open(gamma2_, 4.0)) {
    throw DomainError("expp gamma1 and gamma2 must lie in (0, 4)");
  }
}

ExppParams ExppParams::Published() {
  return ExppParams({7, 5}, {7, 4}, {211, 6}, {139, 6});
}

namespace {

// Raw (unmasked) outputs of the two multiplier branches.
std::int64_t LowerProduct(int frac, const ExppParams& p) {
  const int s = std::max(7, p.gamma1().frac_bits);
  const std::int64_t sum = (static_cast<std::int64_t>(frac) << (s - 7)) +
                           (static_cast<std::int64_t>(p.gamma1().code) << (s - p.gamma1().frac_bits));
  return (p.alpha().code * static_cast<std::int64_t>(frac) * sum) >> (p.alpha().frac_bits + s);
}

std::int64_t UpperProduct(int frac, const ExppParams& p) {
  const int s = std::max(7, p.gamma2().frac_bits);
  const std::int64_t not_frac = 0x7F - frac;
  const std::int64_t sum = (static_cast<std::int64_t>(frac) << (s - 7)) +
                           (static_cast<std::int64_t>(p.gamma2().code) << (s - p.gamma2().frac_bits));
  return (p.beta().code * not_frac * sum) >> (p.beta().frac_bits + s);
}

double PackedValue(std::int64_t exponent, int mantissa) {
  return std::ldexp(1.0 + mantissa / 128.0, static_cast<int>(exponent) - Bf16::kExponentBias);
}

Bf16 Pack(const ShiftedExponent& se, int mantissa) {
  switch (se.kind) {
    case ShiftedExponent::Kind::kNaN: return Bf16::QuietNaN();
    case ShiftedExponent::Kind::kOverflow: return Bf16::Infinity();
    case ShiftedExponent::Kind::kUnderflow: return Bf16::Zero();
    case ShiftedExponent::Kind::kFinite: break;
  }
  const std::int64_t e = se.exponent();
  if (e >= 1) return Bf16::FromBits(static_cast<std::uint16_t>((e << 7) | mantissa));
  return Bf16::FromDouble(PackedValue(e, mantissa));
}

double PackWide(const ShiftedExponent& se, int mantissa) {
  switch (se.kind) {
    case ShiftedExponent::Kind::kNaN: return std::numeric_limits<double>::quiet_NaN();
    case ShiftedExponent::Kind::kOverflow: return std::numeric_limits<double>::infinity();
    case ShiftedExponent::Kind::kUnderflow: return 0.0;
    case ShiftedExponent::Kind::kFinite: break;
  }
  return PackedValue(se.exponent(), mantissa);
}

}  // namespace

bool ExppParams::FitsDatapath() const {
  for (int f = 0; f < 64; ++f) {
    if (LowerProduct(f, *this) > 0x7F) return false;
  }
  for (int f = 64; f < 128; ++f) {
    if (UpperProduct(f, *this) > 0x7F) return false;
  }
  return true;
}

ShiftedExponent shift_exponent(Bf16 x) {
  using Kind = ShiftedExponent::Kind;
  constexpr std::int64_t kBiasShifted = static_cast<std::int64_t>(Bf16::kExponentBias) << 7;
  if (x.is_nan()) return {Kind::kNaN, 0};
  if (x.is_inf()) return {x.is_negative() ? Kind::kUnderflow : Kind::kOverflow, 0};
  const int e = x.exponent_field();
  if (e == 0) return {Kind::kFinite, kBiasShifted};

  const int unbiased = e - Bf16::kExponentBias;
  if (unbiased >= 9) return {x.is_negative() ? Kind::kUnderflow : Kind::kOverflow, 0};

  const std::int64_t significand = 0x80 | x.mantissa_field();
  std::int64_t product = significand * kInvLn2Code;
  if (x.is_negative()) product = -product;
  // significand carries 7 fraction bits and the result keeps 7, so the net
  // alignment is the input exponent minus the constant's fraction bits.
  // Arithmetic right shift floors toward -inf.
  const int shift = kInvLn2FracBits - unbiased;
  const std::int64_t aligned = shift >= 63 ? (product < 0 ? -1 : 0) : product >> shift;
  const std::int64_t m_sh = aligned + kBiasShifted;

  if (std::abs(m_sh) >= (std::int64_t{1} << 16)) {
    return {x.is_negative() ? Kind::kUnderflow : Kind::kOverflow, m_sh};
  }
  if (m_sh >= Bf16::Infinity().bits()) return {Kind::kOverflow, m_sh};
  return {Kind::kFinite, m_sh};
}

int correct_mantissa(int frac, const ExppParams& params) {
  if (frac < 0 || frac > 0x7F) throw DomainError("mantissa fraction must be 7 bits");
  if (frac < 0x40) return static_cast<int>(LowerProduct(frac, params) & 0x7F);
  return static_cast<int>(~UpperProduct(frac, params) & 0x7F);
}

Bf16 exps(Bf16 x) {
  const ShiftedExponent se = shift_exponent(x);
  return Pack(se, se.fraction());
}

Bf16 expp(Bf16 x, const ExppParams& params) {
  const ShiftedExponent se = shift_exponent(x);
  if (se.kind != ShiftedExponent::Kind::kFinite) return Pack(se, 0);
  return Pack(se, correct_mantissa(se.fraction(), params));
}

double exps_wide(Bf16 x) {
  const ShiftedExponent se = shift_exponent(x);
  return PackWide(se, se.fraction());
}

double expp_wide(Bf16 x, const ExppParams& params) {
  const ShiftedExponent se = shift_exponent(x);
  if (se.kind != ShiftedExponent::Kind::kFinite) return PackWide(se, 0);
  return PackWide(se, correct_mantissa(se.fraction(), params));
}

ExppParams analytic_expp_seed() {
  constexpr double kLn2 = std::numbers::ln2;
  constexpr double kSqrt2m1 = std::numbers::sqrt2 - 1.0;
  // Tangent line plus parabola through 2^0.5 - 1 at the half-range point.
  const double alpha = 4.0 * (kSqrt2m1 - kLn2 / 2.0);
  const double beta = 4.0 * (kSqrt2m1 - 1.0 + kLn2);
  const DyadicConstant a{static_cast<std::int32_t>(std::lround(std::ldexp(alpha, 5))), 5};
  const DyadicConstant b{static_cast<std::int32_t>(std::lround(std::ldexp(beta, 4))), 4};
  const double gamma1 = kLn2 / a.value();
  const double gamma2 = 2.0 * kLn2 / b.value() - 1.0;
  const DyadicConstant g1{static_cast<std::int32_t>(std::lround(std::ldexp(gamma1, 6))), 6};
  const DyadicConstant g2{static_cast<std::int32_t>(std::lround(std::ldexp(gamma2, 6))), 6};
  return ExppParams(a, b, g1, g2);
}

namespace {

// Sum of relative errors of every sample, bucketed by its 7-bit fraction and
// by the candidate corrected mantissa. The objective of any tuple is then a
// 128-entry gather, which keeps a 10^6-trial search cheap.
struct FitTable {
  std::array<std::array<double, 128>, 128> err_sum{};
  std::size_t count = 0;
};

const FitTable& SharedFitTable() {
  static const FitTable table = [] {
    FitTable t;
    constexpr std::size_t kSamples = std::size_t{1} << 18;
    std::mt19937_64 rng = make_stream(0, "expu.fit.samples");
    std::uniform_real_distribution<double> dist(-88.7, 88.7);
    for (std::size_t i = 0; i < kSamples; ++i) {
      const Bf16 x = Bf16::FromDouble(dist(rng));
      const ShiftedExponent se = shift_exponent(x);
      if (se.kind != ShiftedExponent::Kind::kFinite) continue;
      // exp(x) / 2^(E-127) is the ideal (1 + c/128).
      const double target = std::exp(x.ToDouble()) /
                            std::ldexp(1.0, static_cast<int>(se.exponent()) - Bf16::kExponentBias);
      auto& row = t.err_sum[static_cast<std::size_t>(se.fraction())];
      for (int c = 0; c < 128; ++c) {
        row[static_cast<std::size_t>(c)] += std::fabs((1.0 + c / 128.0) / target - 1.0);
      }
      ++t.count;
    }
    return t;
  }();
  return table;
}

double Objective(const FitTable& t, const ExppParams& p) {
  double total = 0.0;
  for (int f = 0; f < 128; ++f) {
    total += t.err_sum[static_cast<std::size_t>(f)][static_cast<std::size_t>(correct_mantissa(f, p))];
  }
  return total / static_cast<double>(t.count);
}

}  // namespace

double expp_fit_objective(const ExppParams& params) {
  return Objective(SharedFitTable(), params);
}

ExppFitResult fit_expp_params(std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw DomainError("fit_expp_params needs at least one trial");
  const FitTable& table = SharedFitTable();
  const ExppParams start = analytic_expp_seed();
  ExppParams best = start;
  const double seed_mre = Objective(table, start);
  double best_mre = seed_mre;
  std::uint64_t accepted = 0;

  std::mt19937_64 rng = make_stream(seed, "expu.fit.trials");
  std::uniform_int_distribution<int> small_step(-2, 2);
  std::uniform_int_distribution<int> gamma_step(-12, 12);
  std::uniform_int_distribution<int> wide_gamma_step(-64, 64);
  std::uniform_int_distribution<int> which(0, 15);

  for (std::uint64_t trial = 1; trial < trials; ++trial) {
    const int mask = which(rng) + 1;  // non-empty subset of the four fields
    const bool wide = (rng() & 7) == 0;
    DyadicConstant a = best.alpha();
    DyadicConstant b = best.beta();
    DyadicConstant g1 = best.gamma1();
    DyadicConstant g2 = best.gamma2();
    if (mask & 1) a.code += small_step(rng);
    if (mask & 2) b.code += small_step(rng);
    if (mask & 4) g1.code += wide ? wide_gamma_step(rng) : gamma_step(rng);
    if (mask & 8) g2.code += wide ? wide_gamma_step(rng) : gamma_step(rng);
    if (a.code <= 0 || a.code >= 32 || b.code <= 0 || b.code >= 16 || g1.code <= 0 ||
        g1.code > 255 || g2.code <= 0 || g2.code > 255) {
      continue;
    }
    const ExppParams candidate(a, b, g1, g2);
    if (!candidate.FitsDatapath()) continue;
    const double mre = Objective(table, candidate);
    if (mre < best_mre) {
      best = candidate;
      best_mre = mre;
      ++accepted;
    }
  }
  return {best, best_mre, seed_mre, accepted};
}

}  // namespace softex
