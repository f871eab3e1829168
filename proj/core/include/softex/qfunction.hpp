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

#ifndef SOFTEX_QFUNCTION_HPP_
#define SOFTEX_QFUNCTION_HPP_

namespace softex {

// Gaussian tail probability Q(x) = 0.5 * erfc(x / sqrt(2)).
double q_reference(double x);

// Q(x) for x >= 0 from Craig's finite-range integral
// (1/pi) * int_0^{pi/2} exp(-x^2 / (2 sin^2 t)) dt, by adaptive
// Gauss-Kronrod quadrature. Independent cross-check of q_reference.
double q_craig(double x);

// Exact GELU, x * (1 - Q(x)).
double gelu_exact(double x);

}  // namespace softex

#endif  // SOFTEX_QFUNCTION_HPP_
