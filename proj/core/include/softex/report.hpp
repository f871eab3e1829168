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

#ifndef SOFTEX_REPORT_HPP_
#define SOFTEX_REPORT_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace softex {

inline constexpr const char* kVersion = "0.1.0";

struct ReportMeta {
  std::string command;
  std::uint64_t seed = 0;
};

using CsvRow = std::vector<std::string>;

// "# softex-model <version> command=<command> seed=<seed>", then the column
// header, then one line per row. LF endings. Throws ConfigError when a row
// does not match the schema width.
std::string render_csv(const std::vector<std::string>& schema, const std::vector<CsvRow>& rows,
                       const ReportMeta& meta);

// Writes render_csv output. Throws IoError when the path is not writable.
void emit_report(const std::vector<CsvRow>& rows, const std::vector<std::string>& schema,
                 const std::string& path, const ReportMeta& meta);

// Writes text verbatim, throwing IoError on failure.
void write_text_file(const std::string& path, const std::string& text);

// Shortest decimal that round-trips the double.
std::string format_number(double v);
std::string format_number(std::uint64_t v);

}  // namespace softex

#endif  // SOFTEX_REPORT_HPP_
