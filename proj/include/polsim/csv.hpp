// Copyright 2026 The polsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

namespace polsim {

/// 17-significant-digit decimal formatting; parse_double(format_double(x))
/// recovers x bit-identically.
std::string format_double(double value);
double parse_double(const std::string& text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Writes UTF-8, LF-terminated CSV with a mandatory header row. Fields must
/// not contain commas or newlines (all polsim output is plain tokens).
void write_csv(const std::string& path, const CsvTable& table);

/// Reads a CSV written by write_csv. Throws std::runtime_error on missing
/// file or ragged rows.
CsvTable read_csv(const std::string& path);

}  // namespace polsim
