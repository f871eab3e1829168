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

#ifndef SOFTEX_TOOLS_CLI_HPP_
#define SOFTEX_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace softex::cli {

// Options shared by every subcommand, as parsed from the command line.
struct RunConfig {
  std::string subcommand;
  std::uint64_t seed = 7;
  std::string out;     // primary output file
  std::string report;  // secondary output (fit reports), if any
  std::vector<std::string> param_files;
};

// Directory used for outputs when --out is not given.
inline constexpr const char* kOutDirEnv = "SOFTEX_OUT_DIR";

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitConvergence = 4;

// Parses argv, runs one subcommand and writes its reports. Human-readable
// progress goes to `out`; failures are written to `err` as a one-line JSON
// record {"error": kind, "message": text}.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace softex::cli

#endif  // SOFTEX_TOOLS_CLI_HPP_
