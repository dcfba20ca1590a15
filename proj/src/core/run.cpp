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

#include "kcomplex/run.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "kcomplex/dynamics.hpp"
#include "kcomplex/error.hpp"
#include "kcomplex/geometry.hpp"
#include "kcomplex/lanczos.hpp"
#include "kcomplex/operator_file.hpp"
#include "kcomplex/symmetry.hpp"

namespace kcomplex {

namespace {

constexpr std::string_view kVersion = "0.1.0";

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ";" : "") + format_double(xs[i]);
  return s;
}

CsvTable with_provenance(CsvTable table, const RunConfig& c) {
  table.add_comment(fmt::format("kcomplex {} {}", kVersion, to_string(c.command)));
  switch (c.command) {
    case Command::Lanczos:
      table.add_comment(fmt::format("hamiltonian={} seed={} max_dim={} term_tol={}", c.hamiltonian_path,
                                    c.seed_path, c.max_dim, format_double(c.term_tol)));
      break;
    case Command::SU2:
    case Command::Quench:
    case Command::Deform:
      table.add_comment(fmt::format("ell={} B={} tmax={} grid={}", format_double(c.ell), format_double(c.field),
                                    format_double(c.resolved_t_max()), c.grid_points));
      if (c.command == Command::Quench) table.add_comment("tstar=" + format_double(c.t_star));
      if (c.command == Command::Deform) table.add_comment("lambda=" + join(c.resolved_lambdas()));
      break;
    case Command::SU11:
      table.add_comment(fmt::format("k={} B={} tmax={} grid={}", format_double(c.k), format_double(c.field),
                                    format_double(c.resolved_t_max()), c.grid_points));
      break;
    case Command::Heights:
      table.add_comment(fmt::format("ell={} lambda={}", format_double(c.ell), join(c.resolved_lambdas())));
      break;
  }
  return table;
}

CsvTable run_lanczos(const RunConfig& c) {
  const OperatorMatrix h = load_operator_file(c.hamiltonian_path, true);
  const OperatorMatrix seed_op = load_operator_file(c.seed_path, false);
  require(seed_op.dim() == h.dim(), "seed operator dimension " + std::to_string(seed_op.dim()) +
                                        " does not match Hamiltonian dimension " + std::to_string(h.dim()));
  const OperatorState seed = OperatorState::normalized(vectorize(seed_op).entries());
  const std::size_t ambient = static_cast<std::size_t>(seed.size());
  const KrylovBasis basis =
      lanczos_basis(commutator_map(h), seed, c.max_dim == 0 ? ambient : c.max_dim, c.term_tol);
  CsvTable t({"m", "beta_m"});
  for (std::size_t m = 1; m < basis.dim(); ++m) t.add_row({static_cast<double>(m), basis.hops()[m - 1]});
  auto out = with_provenance(std::move(t), c);
  out.add_comment("krylov_dimension=" + std::to_string(basis.dim()));
  return out;
}

CsvTable run_su2(const RunConfig& c) {
  const SU2Params p{c.ell, c.field};
  const auto grid = uniform_grid(c.resolved_t_max(), c.grid_points);
  const ComplexityTrace tr = symmetry_trace(p, grid);
  CsvTable t({"t", "C_K_num", "C_K_analytic", "C", "theta", "psi"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.add_row({tr.times[i], tr.ck[i], tr.ck_analytic[i], tr.circuit[i], tr.theta[i], tr.psi[i]});
  }
  return with_provenance(std::move(t), c);
}

CsvTable run_su11(const RunConfig& c) {
  const SU11Params p{c.k, c.field, 0};
  const auto grid = uniform_grid(c.resolved_t_max(), c.grid_points);
  const ComplexityTrace tr = symmetry_trace(p, grid);
  CsvTable t({"t", "C_K_num", "C_K_analytic", "C", "leak"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.add_row({tr.times[i], tr.ck[i], tr.ck_analytic[i], tr.circuit[i], tr.leak[i]});
  }
  return with_provenance(std::move(t), c);
}

CsvTable run_deform(const RunConfig& c) {
  const SU2Params p{c.ell, c.field};
  const auto grid = uniform_grid(c.resolved_t_max(), c.grid_points);
  CsvTable t({"lambda", "t", "C_K", "C_K_over_2l", "C"});
  for (double lambda : c.resolved_lambdas()) {
    const ComplexityTrace tr = symmetry_trace(p, grid, DeformationParams{lambda, c.ell});
    for (std::size_t i = 0; i < grid.size(); ++i) {
      t.add_row({lambda, tr.times[i], tr.ck_deformed[i], tr.ck_deformed[i] / (2.0 * c.ell), tr.circuit[i]});
    }
  }
  return with_provenance(std::move(t), c);
}

CsvTable run_quench(const RunConfig& c) {
  const SU2Params p{c.ell, c.field};
  const auto grid = uniform_grid(c.resolved_t_max(), c.grid_points);
  const ComplexityTrace tr = quench_trace(p, c.t_star, grid);
  CsvTable t({"t", "C_K", "C_K_prime", "C", "C_K_over_2l", "C_K_prime_over_2l"});
  const double unit = 2.0 * c.ell;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    t.add_row({tr.times[i], tr.ck[i], tr.ck_prime[i], tr.circuit[i], tr.ck[i] / unit, tr.ck_prime[i] / unit});
  }
  return with_provenance(std::move(t), c);
}

CsvTable run_heights(const RunConfig& c) {
  const DeformationParams d{c.resolved_lambdas().front(), c.ell};
  const SU2Params p{c.ell, 1.0};
  const std::vector<double> h = height_weights(d);
  CsvTable t({"n", "theta_n", "h_theta_n"});
  for (std::size_t n = 0; n < h.size(); ++n) t.add_row({static_cast<double>(n), strip_center(p, n), h[n]});
  return with_provenance(std::move(t), c);
}

}  // namespace

std::string_view to_string(Command c) noexcept {
  switch (c) {
    case Command::Lanczos: return "lanczos";
    case Command::SU2: return "su2";
    case Command::SU11: return "su11";
    case Command::Deform: return "deform";
    case Command::Quench: return "quench";
    case Command::Heights: return "heights";
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) noexcept {
  for (Command c : {Command::Lanczos, Command::SU2, Command::SU11, Command::Deform, Command::Quench,
                    Command::Heights}) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

double RunConfig::resolved_t_max() const {
  if (t_max) return *t_max;
  return command == Command::SU11 ? 3.0 : 2.0 * std::numbers::pi;
}

std::vector<double> RunConfig::resolved_lambdas() const {
  if (!lambdas.empty()) return lambdas;
  if (command == Command::Deform) return {0.9, 1.0, 1.2};
  return {1.0};
}

void RunConfig::validate() const {
  require(std::isfinite(field), "B must be finite");
  const double tmax = resolved_t_max();
  require(std::isfinite(tmax) && tmax >= 0.0, "tmax must be finite and >= 0");
  require(grid_points >= 2, "grid must have at least 2 points");
  switch (command) {
    case Command::Lanczos:
      require(!hamiltonian_path.empty(), "lanczos needs --hamiltonian <file>");
      require(!seed_path.empty(), "lanczos needs --seed <file>");
      require(std::isfinite(term_tol) && term_tol >= 0.0, "term-tol must be finite and >= 0");
      break;
    case Command::SU11:
      require(std::isfinite(k) && k > 0.0, "k must be positive");
      break;
    case Command::Quench:
      require(std::isfinite(t_star) && t_star >= 0.0, "tstar must be finite and >= 0");
      [[fallthrough]];
    case Command::SU2:
    case Command::Deform:
    case Command::Heights:
      kcomplex::validate(SU2Params{ell, field});
      break;
  }
  if (command == Command::Heights) require(resolved_lambdas().size() == 1, "heights takes a single lambda");
  if (command == Command::Deform || command == Command::Heights) {
    for (double lambda : resolved_lambdas()) kcomplex::validate(DeformationParams{lambda, ell});
  }
}

CsvTable run(const RunConfig& config) {
  config.validate();
  switch (config.command) {
    case Command::Lanczos: return run_lanczos(config);
    case Command::SU2: return run_su2(config);
    case Command::SU11: return run_su11(config);
    case Command::Deform: return run_deform(config);
    case Command::Quench: return run_quench(config);
    case Command::Heights: return run_heights(config);
  }
  fail(ErrorCode::InvalidInput, "unknown command");
}

}  // namespace kcomplex
