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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kcomplex/csv.hpp"

namespace kcomplex {

enum class Command { Lanczos, SU2, SU11, Deform, Quench, Heights };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view name) noexcept;

/// One experiment. Unset optionals take per-command defaults: t_max is 2 pi
/// (3 for su11), lambdas are {0.9, 1, 1.2} for deform and {1} for heights.
struct RunConfig {
  Command command = Command::SU2;
  double ell = 1.0;
  double k = 0.5;
  double field = 1.0;
  std::vector<double> lambdas;
  std::optional<double> t_max;
  double t_star = 1.5707963267948966;
  std::size_t grid_points = 512;
  std::string hamiltonian_path;
  std::string seed_path;
  /// 0: the ambient operator-space dimension.
  std::size_t max_dim = 0;
  double term_tol = 1e-12;

  /// Invalid-input for malformed parameters; domain-error for lambda outside
  /// the height validity domain.
  void validate() const;

  double resolved_t_max() const;
  std::vector<double> resolved_lambdas() const;
};

/// Runs the experiment and returns its table with the config echoed as
/// comments. Output columns per command:
///   lanczos  m, beta_m
///   su2      t, C_K_num, C_K_analytic, C, theta, psi
///   su11     t, C_K_num, C_K_analytic, C, leak
///   deform   lambda, t, C_K, C_K_over_2l, C
///   quench   t, C_K, C_K_prime, C, C_K_over_2l, C_K_prime_over_2l
///   heights  n, theta_n, h_theta_n
CsvTable run(const RunConfig& config);

}  // namespace kcomplex
