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

#include "softex/qfunction.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "softex/errors.hpp"

namespace softex {

double q_reference(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double q_craig(double x) {
  if (!(x >= 0.0)) throw DomainError("Craig's form holds for x >= 0");
  const double x2 = x * x;
  auto integrand = [x2](double t) {
    const double s = std::sin(t);
    if (x2 == 0.0) return 1.0;
    if (s == 0.0) return 0.0;
    return std::exp(-x2 / (2.0 * s * s));
  };
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      integrand, 0.0, std::numbers::pi / 2.0, 20, 1e-15, &err);
  return v / std::numbers::pi;
}

double gelu_exact(double x) { return x * q_reference(-x); }

}  // namespace softex
