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

#include "kcomplex/operator_file.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "kcomplex/csv.hpp"
#include "kcomplex/error.hpp"

namespace kcomplex {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

double parse_number(std::string_view token, std::size_t line) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) parse_fail(line, "invalid number '" + std::string(token) + "'");
  return value;
}

Complex parse_entry(std::string_view field, std::size_t line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < field.size()) {
    const auto b = field.find_first_not_of(" \t\r", pos);
    if (b == std::string_view::npos) break;
    const auto e = field.find_first_of(" \t\r", b);
    tokens.push_back(field.substr(b, e == std::string_view::npos ? std::string_view::npos : e - b));
    pos = e == std::string_view::npos ? field.size() : e;
  }
  if (tokens.size() != 2) {
    parse_fail(line, "expected an entry 're im', got '" + std::string(trim(field)) + "'");
  }
  return {parse_number(tokens[0], line), parse_number(tokens[1], line)};
}

}  // namespace

OperatorMatrix parse_operator_text(const std::string& text, bool hamiltonian) {
  std::vector<std::vector<Complex>> rows;
  std::vector<std::size_t> row_lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    std::vector<Complex> row;
    std::size_t start = 0;
    while (true) {
      const auto comma = s.find(',', start);
      row.push_back(parse_entry(s.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                : comma - start),
                                line));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line);
  }
  if (rows.empty()) fail(ErrorCode::ParseError, "matrix file contains no rows");
  const std::size_t d = rows.size();
  for (std::size_t i = 0; i < d; ++i) {
    require(rows[i].size() == d, "matrix must be square: expected " + std::to_string(d) + "x" +
                                     std::to_string(d) + " from " + std::to_string(d) + " rows, but line " +
                                     std::to_string(row_lines[i]) + " has " + std::to_string(rows[i].size()) +
                                     " entries");
  }
  Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  }
  return hamiltonian ? OperatorMatrix::hamiltonian(std::move(m)) : OperatorMatrix(std::move(m));
}

OperatorMatrix load_operator_file(const std::string& path, bool hamiltonian) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open matrix file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_operator_text(buffer.str(), hamiltonian);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.what());
  }
}

std::string format_operator_text(const OperatorMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.dim(); ++i) {
    for (Eigen::Index j = 0; j < m.dim(); ++j) {
      if (j) out += ", ";
      out += format_double(m.entries()(i, j).real()) + " " + format_double(m.entries()(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

void save_operator_file(const std::string& path, const OperatorMatrix& m) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot write matrix file '" + path + "'");
  out << format_operator_text(m);
  if (!out) fail(ErrorCode::IoError, "failed writing matrix file '" + path + "'");
}

}  // namespace kcomplex
