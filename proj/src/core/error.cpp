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

#include "kcomplex/error.hpp"

namespace kcomplex {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidInput: return "invalid-input";
    case ErrorCode::DomainError: return "domain-error";
    case ErrorCode::TruncationError: return "truncation-error";
    case ErrorCode::NotCoherent: return "not-coherent";
    case ErrorCode::NumericalError: return "numerical-error";
    case ErrorCode::IoError: return "io-error";
    case ErrorCode::ParseError: return "parse-error";
  }
  return "unknown-error";
}

}  // namespace kcomplex
