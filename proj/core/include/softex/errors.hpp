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

#ifndef SOFTEX_ERRORS_HPP_
#define SOFTEX_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace softex {

// Precondition violated by a caller-supplied value (empty vector, value out
// of the representable range, non-positive denominator, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A NaN or otherwise unacceptable element arrived at a streaming input.
class IngestError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Missing or inconsistent configuration (parameter sets, sweep ranges).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A report or input file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Iterative solver gave up. Carries the last sampled residual profile so
// the caller can inspect where equioscillation broke down.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what,
                   std::vector<std::pair<double, double>> profile)
      : std::runtime_error(what), profile_(std::move(profile)) {}

  const std::vector<std::pair<double, double>>& residual_profile() const {
    return profile_;
  }

 private:
  std::vector<std::pair<double, double>> profile_;
};

}  // namespace softex

#endif  // SOFTEX_ERRORS_HPP_
