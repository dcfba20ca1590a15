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

#include "kcomplex/kcomplex.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <iostream>
#include <fstream>
#include <limits>
#include <new>
#include <string>

#include "kcomplex/csv.hpp"
#include "kcomplex/error.hpp"
#include "kcomplex/geometry.hpp"
#include "kcomplex/lanczos.hpp"
#include "kcomplex/operator_file.hpp"
#include "kcomplex/opspace.hpp"
#include "kcomplex/run.hpp"
#include "kcomplex/symmetry.hpp"

struct kc_operator {
  kcomplex::OperatorMatrix matrix;
};

struct kc_table {
  kcomplex::CsvTable table;
};

namespace {

thread_local std::string last_error;

kc_status to_status(kcomplex::ErrorCode code) {
  switch (code) {
    case kcomplex::ErrorCode::InvalidInput: return KC_ERR_INVALID_INPUT;
    case kcomplex::ErrorCode::DomainError: return KC_ERR_DOMAIN;
    case kcomplex::ErrorCode::TruncationError: return KC_ERR_TRUNCATION;
    case kcomplex::ErrorCode::NotCoherent: return KC_ERR_NOT_COHERENT;
    case kcomplex::ErrorCode::NumericalError: return KC_ERR_NUMERICAL;
    case kcomplex::ErrorCode::IoError: return KC_ERR_IO;
    case kcomplex::ErrorCode::ParseError: return KC_ERR_PARSE;
  }
  return KC_ERR_INTERNAL;
}

template <class F>
kc_status guarded(F&& body) noexcept {
  try {
    body();
    last_error.clear();
    return KC_OK;
  } catch (const kcomplex::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown exception";
  }
  return KC_ERR_INTERNAL;
}

void need(const void* p, const char* name) {
  kcomplex::require(p != nullptr, std::string(name) + " must not be NULL");
}

}  // namespace

extern "C" {

KC_API const char* kc_version(void) { return "0.1.0"; }

KC_API const char* kc_status_name(kc_status status) {
  switch (status) {
    case KC_OK: return "ok";
    case KC_ERR_INTERNAL: return "internal-error";
    default: break;
  }
  const auto code = static_cast<kcomplex::ErrorCode>(status);
  const auto name = kcomplex::to_string(code);
  return name.data();
}

KC_API const char* kc_last_error(void) { return last_error.c_str(); }

KC_API kc_status kc_operator_create(size_t dim, const double* re, const double* im, int hamiltonian,
                                    kc_operator** out) {
  return guarded([&] {
    need(re, "re");
    need(out, "out");
    *out = nullptr;
    kcomplex::require(dim >= 1, "operator dimension must be at least 1");
    const auto d = static_cast<Eigen::Index>(dim);
    kcomplex::Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        const auto k = static_cast<std::size_t>(i * d + j);
        m(i, j) = {re[k], im != nullptr ? im[k] : 0.0};
      }
    }
    auto op = hamiltonian ? kcomplex::OperatorMatrix::hamiltonian(std::move(m))
                          : kcomplex::OperatorMatrix(std::move(m));
    *out = new kc_operator{std::move(op)};
  });
}

KC_API kc_status kc_operator_load(const char* path, int hamiltonian, kc_operator** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = nullptr;
    *out = new kc_operator{kcomplex::load_operator_file(path, hamiltonian != 0)};
  });
}

KC_API kc_status kc_operator_save(const kc_operator* op, const char* path) {
  return guarded([&] {
    need(op, "operator");
    need(path, "path");
    kcomplex::save_operator_file(path, op->matrix);
  });
}

KC_API size_t kc_operator_dim(const kc_operator* op) {
  return op != nullptr ? static_cast<size_t>(op->matrix.dim()) : 0;
}

KC_API kc_status kc_operator_entry(const kc_operator* op, size_t row, size_t col, double* re, double* im) {
  return guarded([&] {
    need(op, "operator");
    const auto d = static_cast<size_t>(op->matrix.dim());
    kcomplex::require(row < d && col < d, "operator entry index out of range");
    const auto z = op->matrix.entries()(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    if (re != nullptr) *re = z.real();
    if (im != nullptr) *im = z.imag();
  });
}

KC_API void kc_operator_free(kc_operator* op) { delete op; }

KC_API kc_status kc_lanczos_hops(const kc_operator* hamiltonian, const kc_operator* seed, size_t max_dim,
                                 double term_tol, double* hops, size_t capacity, size_t* dimension) {
  return guarded([&] {
    need(hamiltonian, "hamiltonian");
    need(seed, "seed");
    need(dimension, "dimension");
    kcomplex::require(capacity == 0 || hops != nullptr, "hops must not be NULL when capacity > 0");
    kcomplex::require(seed->matrix.dim() == hamiltonian->matrix.dim(), "seed/Hamiltonian dimension mismatch");
    const auto state = kcomplex::OperatorState::normalized(kcomplex::vectorize(seed->matrix).entries());
    const auto ambient = static_cast<size_t>(state.size());
    const auto basis = kcomplex::lanczos_basis(kcomplex::commutator_map(hamiltonian->matrix), state,
                                               max_dim == 0 ? ambient : max_dim, term_tol);
    *dimension = basis.dim();
    for (size_t i = 0; i < basis.hops().size() && i < capacity; ++i) hops[i] = basis.hops()[i];
  });
}

KC_API kc_status kc_analytic_ck_su2(double ell, double field, double t, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = kcomplex::analytic_ck(kcomplex::SU2Params{ell, field}, t);
  });
}

KC_API kc_status kc_analytic_ck_su11(double k, double field, double t, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = kcomplex::analytic_ck(kcomplex::SU11Params{k, field, 0}, t);
  });
}

KC_API kc_status kc_height(double theta, double lambda, double ell, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = kcomplex::height(theta, kcomplex::DeformationParams{lambda, ell});
  });
}

KC_API kc_status kc_height_weights(double lambda, double ell, double* out, size_t capacity, size_t* count) {
  return guarded([&] {
    need(count, "count");
    kcomplex::require(capacity == 0 || out != nullptr, "out must not be NULL when capacity > 0");
    const auto w = kcomplex::height_weights(kcomplex::DeformationParams{lambda, ell});
    *count = w.size();
    for (size_t i = 0; i < w.size() && i < capacity; ++i) out[i] = w[i];
  });
}

KC_API kc_status kc_geodesic_length(double theta1, double psi1, double theta2, double psi2, double lambda,
                                    double ell, double* out) {
  return guarded([&] {
    need(out, "out");
    *out = kcomplex::geodesic_length({theta1, psi1, 0.0}, {theta2, psi2, 0.0}, lambda, ell);
  });
}

KC_API void kc_run_config_init(kc_run_config* config, kc_command command) {
  if (config == nullptr) return;
  const kcomplex::RunConfig defaults;
  config->command = command;
  config->ell = defaults.ell;
  config->k = defaults.k;
  config->field = defaults.field;
  config->lambdas = nullptr;
  config->lambda_count = 0;
  config->t_max = std::numeric_limits<double>::quiet_NaN();
  config->t_star = defaults.t_star;
  config->grid_points = defaults.grid_points;
  config->hamiltonian_path = nullptr;
  config->seed_path = nullptr;
  config->max_dim = defaults.max_dim;
  config->term_tol = defaults.term_tol;
}

KC_API kc_status kc_command_parse(const char* name, kc_command* out) {
  return guarded([&] {
    need(name, "name");
    need(out, "out");
    const auto c = kcomplex::parse_command(name);
    kcomplex::require(c.has_value(), std::string("unknown command '") + name + "'");
    *out = static_cast<kc_command>(static_cast<int>(*c));
  });
}

KC_API kc_status kc_run(const kc_run_config* config, kc_table** out) {
  return guarded([&] {
    need(config, "config");
    need(out, "out");
    *out = nullptr;
    kcomplex::require(config->command >= KC_CMD_LANCZOS && config->command <= KC_CMD_HEIGHTS, "unknown command");
    kcomplex::RunConfig rc;
    rc.command = static_cast<kcomplex::Command>(static_cast<int>(config->command));
    rc.ell = config->ell;
    rc.k = config->k;
    rc.field = config->field;
    kcomplex::require(config->lambda_count == 0 || config->lambdas != nullptr, "lambdas must not be NULL");
    rc.lambdas.assign(config->lambdas, config->lambdas + config->lambda_count);
    if (!std::isnan(config->t_max)) rc.t_max = config->t_max;
    rc.t_star = config->t_star;
    rc.grid_points = config->grid_points;
    if (config->hamiltonian_path != nullptr) rc.hamiltonian_path = config->hamiltonian_path;
    if (config->seed_path != nullptr) rc.seed_path = config->seed_path;
    rc.max_dim = config->max_dim;
    rc.term_tol = config->term_tol;
    *out = new kc_table{kcomplex::run(rc)};
  });
}

KC_API size_t kc_table_rows(const kc_table* table) { return table != nullptr ? table->table.rows().size() : 0; }

KC_API size_t kc_table_columns(const kc_table* table) {
  return table != nullptr ? table->table.header().size() : 0;
}

KC_API const char* kc_table_column_name(const kc_table* table, size_t col) {
  if (table == nullptr || col >= table->table.header().size()) return nullptr;
  return table->table.header()[col].c_str();
}

KC_API kc_status kc_table_column_index(const kc_table* table, const char* name, size_t* col) {
  return guarded([&] {
    need(table, "table");
    need(name, "name");
    need(col, "col");
    *col = table->table.column(name);
  });
}

KC_API kc_status kc_table_value(const kc_table* table, size_t row, size_t col, double* out) {
  return guarded([&] {
    need(table, "table");
    need(out, "out");
    const auto& rows = table->table.rows();
    kcomplex::require(row < rows.size() && col < table->table.header().size(), "table index out of range");
    *out = rows[row][col];
  });
}

KC_API kc_status kc_table_write_csv(const kc_table* table, const char* path) {
  return guarded([&] {
    need(table, "table");
    if (path == nullptr || std::strcmp(path, "-") == 0) {
      table->table.write(std::cout);
      std::cout.flush();
      if (!std::cout) kcomplex::fail(kcomplex::ErrorCode::IoError, "failed writing CSV to stdout");
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) kcomplex::fail(kcomplex::ErrorCode::IoError, std::string("cannot open output '") + path + "'");
    table->table.write(f);
    f.close();
    if (!f) kcomplex::fail(kcomplex::ErrorCode::IoError, std::string("failed writing '") + path + "'");
  });
}

KC_API kc_status kc_table_to_csv(const kc_table* table, char* buffer, size_t capacity, size_t* required) {
  return guarded([&] {
    need(table, "table");
    need(required, "required");
    const std::string text = table->table.to_string();
    *required = text.size() + 1;
    if (buffer != nullptr && capacity >= text.size() + 1) std::memcpy(buffer, text.c_str(), text.size() + 1);
  });
}

KC_API void kc_table_free(kc_table* table) { delete table; }

}  // extern "C"
