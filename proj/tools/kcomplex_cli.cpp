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


// kcomplex command-line front end. Talks to the library only through the C
// interface.

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kcomplex/kcomplex.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

int exit_code(kc_status s) {
  switch (s) {
    case KC_OK: return 0;
    case KC_ERR_INVALID_INPUT:
    case KC_ERR_PARSE:
    case KC_ERR_IO: return kExitUsage;
    default: return kExitNumeric;
  }
}

int report(kc_status s) {
  std::fprintf(stderr, "kcomplex: %s: %s\n", kc_status_name(s), kc_last_error());
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Krylov and circuit complexity of operator dynamics with SU(2) and SU(1,1) symmetry"};
  app.set_version_flag("--version", std::string(kc_version()));
  app.require_subcommand(1);
  app.fallthrough();

  double ell = 1.0;
  double k = 0.5;
  double field = 1.0;
  std::vector<double> lambdas;
  double t_max = std::numeric_limits<double>::quiet_NaN();
  double t_star = 1.5707963267948966;
  std::size_t grid = 512;
  std::string output = "-";
  std::string hamiltonian;
  std::string seed;
  std::size_t max_dim = 0;
  double term_tol = 1e-12;

  app.add_option("--ell", ell, "spin l (2l a positive integer)")->capture_default_str();
  app.add_option("--k", k, "Bargmann index k > 0 (su11)")->capture_default_str();
  app.add_option("--B", field, "field strength B")->capture_default_str();
  app.add_option("--lambda", lambdas, "gate-cost anisotropy; repeat for a sweep (deform, heights)");
  app.add_option("--tmax", t_max, "end of the time window (default 2 pi, su11: 3)");
  app.add_option("--tstar", t_star, "quench time (quench)")->capture_default_str();
  app.add_option("--grid", grid, "number of time points")->capture_default_str();
  app.add_option("-o,--output", output, "CSV output path, '-' for stdout")->capture_default_str();
  app.add_option("--hamiltonian", hamiltonian, "Hamiltonian matrix file (lanczos)");
  app.add_option("--seed", seed, "seed operator matrix file (lanczos)");
  app.add_option("--max-dim", max_dim, "Krylov dimension cap, 0 = full (lanczos)")->capture_default_str();
  app.add_option("--term-tol", term_tol, "relative termination tolerance (lanczos)")->capture_default_str();

  const std::vector<std::pair<const char*, const char*>> commands = {
      {"lanczos", "Lanczos hops beta_m of [H, .] from matrix files"},
      {"su2", "SU(2) K-complexity, circuit complexity and tomography angles"},
      {"su11", "SU(1,1) K-complexity under truncated evolution"},
      {"deform", "height-weighted K-complexity for a lambda sweep"},
      {"quench", "K-complexity in the original and dual Krylov bases across a quench"},
      {"heights", "heights h(theta_n) at the Krylov strip centers"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  kc_command command;
  if (const kc_status s = kc_command_parse(name.c_str(), &command); s != KC_OK) return report(s);

  kc_run_config config;
  kc_run_config_init(&config, command);
  config.ell = ell;
  config.k = k;
  config.field = field;
  config.lambdas = lambdas.empty() ? nullptr : lambdas.data();
  config.lambda_count = lambdas.size();
  config.t_max = t_max;
  config.t_star = t_star;
  config.grid_points = grid;
  config.hamiltonian_path = hamiltonian.c_str();
  config.seed_path = seed.c_str();
  config.max_dim = max_dim;
  config.term_tol = term_tol;

  kc_table* table = nullptr;
  if (const kc_status s = kc_run(&config, &table); s != KC_OK) return report(s);
  const kc_status written = kc_table_write_csv(table, output.c_str());
  kc_table_free(table);
  if (written != KC_OK) return report(written);
  return 0;
}
