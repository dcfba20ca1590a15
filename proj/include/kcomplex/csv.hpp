// Copyright 2026 The kcomplex Authors
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

#include <iosfwd>
#include <string>
#include <vector>

namespace kcomplex {

/// Rectangular numeric table with '#'-prefixed provenance comments.
///
/// Serialized as one comment line per entry, a comma-separated header, and
/// rows of doubles printed with 17 significant digits ("%.17g"), which
/// round-trips IEEE doubles exactly and is byte-stable for identical input.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_comment(std::string line);
  void add_row(std::vector<double> row);

  const std::vector<std::string>& header() const noexcept { return header_; }
  const std::vector<std::vector<double>>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& comments() const noexcept { return comments_; }

  /// Index of a named column; invalid-input if absent.
  std::size_t column(const std::string& name) const;

  void write(std::ostream& out) const;
  std::string to_string() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<double>> rows_;
  std::vector<std::string> comments_;
};

/// "%.17g".
std::string format_double(double x);

}  // namespace kcomplex
