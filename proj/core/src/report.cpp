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

#include "softex/report.hpp"

#include <charconv>
#include <fstream>

#include "softex/errors.hpp"

namespace softex {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_number(std::uint64_t v) { return std::to_string(v); }

std::string render_csv(const std::vector<std::string>& schema, const std::vector<CsvRow>& rows,
                       const ReportMeta& meta) {
  if (schema.empty()) throw ConfigError("report schema has no columns");
  std::string out = "# softex-model ";
  out += kVersion;
  out += " command=" + meta.command + " seed=" + std::to_string(meta.seed) + "\n";
  auto join = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  join(schema);
  for (const CsvRow& row : rows) {
    if (row.size() != schema.size()) throw ConfigError("report row width does not match schema");
    join(row);
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot write " + path);
  f << text;
  f.close();
  if (!f) throw IoError("failed writing " + path);
}

void emit_report(const std::vector<CsvRow>& rows, const std::vector<std::string>& schema,
                 const std::string& path, const ReportMeta& meta) {
  write_text_file(path, render_csv(schema, rows, meta));
}

}  // namespace softex
