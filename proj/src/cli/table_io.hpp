// Copyright 2026 the lgcavity authors
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

#ifndef LGCAVITY_CLI_TABLE_IO_HPP
#define LGCAVITY_CLI_TABLE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgcavity::cli {

/// Numeric table with a header row; the common shape of every CSV this
/// tool reads or writes.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  long column_index(const std::string& name) const;  ///< -1 when absent
};

/// Doubles serialized with 17 significant digits, newline-terminated rows,
/// no trailing whitespace. Identical tables produce identical bytes.
void write_csv(std::ostream& out, const Table& table);

/// Strict reader for the write_csv format: one header line, comma-separated
/// numeric rows of matching width. Violations throw std::invalid_argument.
Table read_csv(std::istream& in);

std::string format_double(double value);

}  // namespace lgcavity::cli

#endif  // LGCAVITY_CLI_TABLE_IO_HPP
