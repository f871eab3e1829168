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

#ifndef SOFTEX_MINIMAX_HPP_
#define SOFTEX_MINIMAX_HPP_

#include <string>
#include <utility>
#include <vector>

#include "softex/gelu.hpp"

namespace softex {

enum class ErrorMetric { kRelative, kAbsolute };
enum class R0Mode { kZero, kMinusMax };

struct MinimaxProblem {
  int n_terms = 4;
  double x_end = 2.8;
  ErrorMetric metric = ErrorMetric::kRelative;
  R0Mode r0_mode = R0Mode::kMinusMax;
  int max_iterations = 100;

  // Throws DomainError for n_terms outside [1, 8] or x_end <= 0.
  void Validate() const;
};

struct MinimaxSolution {
  SumExpParams params;
  // Points where |r| = err_max with alternating sign. For the relative
  // metric the last entry is x_end itself.
  std::vector<double> extrema;
  double err_max = 0.0;
  std::vector<std::pair<double, double>> residual_profile;  // (x, r(x))
  int iterations = 0;
};

// Rectangular rule on Craig's integral: a pointwise upper bound of Q.
SumExpParams chiani_init(int n);

// approx - Q (absolute) or (approx - Q) / Q (relative).
double residual(const SumExpParams& params, double x, ErrorMetric metric);

// Equioscillating fit on [0, x_end]. Starts from chiani_init, prefits with
// increasing L^p norms, then alternates extremum relocation and a damped
// Newton solve of the equal-ripple equations. Throws ConvergenceError with
// the last residual profile when it fails.
MinimaxSolution solve_minimax(const MinimaxProblem& problem);

std::string to_string(ErrorMetric m);
std::string to_string(R0Mode m);
ErrorMetric error_metric_from_string(const std::string& s);
R0Mode r0_mode_from_string(const std::string& s);

// {N, x_end, metric, r0_mode, r_max, extrema, iterations}
std::string fit_report_json(const MinimaxProblem& problem, const MinimaxSolution& solution);

}  // namespace softex

#endif  // SOFTEX_MINIMAX_HPP_
