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


// Plain-text matrix files: one matrix row per line, entries separated by
// commas, each entry a whitespace-separated "re im" pair. Blank lines and
// lines starting with '#' are ignored.
//
//   # sigma_x
//   0 0, 1 0
//   1 0, 0 0

#pragma once

#include <string>

#include "kcomplex/opspace.hpp"

namespace kcomplex {

/// Parse errors name the offending line; a non-square matrix is invalid-input
/// naming the expected shape. Hamiltonian files are checked for Hermiticity.
OperatorMatrix parse_operator_text(const std::string& text, bool hamiltonian = false);
OperatorMatrix load_operator_file(const std::string& path, bool hamiltonian = false);

std::string format_operator_text(const OperatorMatrix& m);
void save_operator_file(const std::string& path, const OperatorMatrix& m);

}  // namespace kcomplex
