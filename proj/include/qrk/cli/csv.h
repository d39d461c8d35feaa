// Copyright 2026 The qrk Authors
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

#ifndef QRK_CLI_CSV_H_
#define QRK_CLI_CSV_H_

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qrk::cli {

/// Shortest decimal form that parses back to the same double. Infinities and
/// NaN are written as inf, -inf and nan.
std::string format_number(double x);

/// Parses a cell written by format_number. Throws std::invalid_argument.
double parse_number(std::string_view cell);

/// Writes cells separated by commas. Cells never contain commas, so no
/// quoting is applied.
void write_row(std::ostream& out, std::span<const std::string> cells);

std::vector<std::string> split_row(std::string_view line);

}  // namespace qrk::cli

#endif  // QRK_CLI_CSV_H_
