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

#include "kcomplex/csv.hpp"

#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "kcomplex/error.hpp"

namespace kcomplex {

std::string format_double(double x) { return fmt::format("{:.17g}", x); }

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
  require(!header_.empty(), "CSV table needs at least one column");
  for (const auto& h : header_) {
    require(!h.empty() && h.find_first_of(",\n") == std::string::npos, "invalid CSV column name '" + h + "'");
  }
}

void CsvTable::add_comment(std::string line) {
  require(line.find('\n') == std::string::npos, "CSV comment must be a single line");
  comments_.push_back(std::move(line));
}

void CsvTable::add_row(std::vector<double> row) {
  require(row.size() == header_.size(), "CSV row has " + std::to_string(row.size()) + " fields, expected " +
                                            std::to_string(header_.size()));
  rows_.push_back(std::move(row));
}

std::size_t CsvTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  fail(ErrorCode::InvalidInput, "no CSV column named '" + name + "'");
}

void CsvTable::write(std::ostream& out) const {
  for (const auto& c : comments_) out << "# " << c << '\n';
  for (std::size_t i = 0; i < header_.size(); ++i) out << (i ? "," : "") << header_[i];
  out << '\n';
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
}

std::string CsvTable::to_string() const {
  std::ostringstream s;
  write(s);
  return s.str();
}

}  // namespace kcomplex
