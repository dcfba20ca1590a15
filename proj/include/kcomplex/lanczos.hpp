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
#include <vector>

#include "kcomplex/opspace.hpp"

namespace kcomplex {

/// Orthonormal Krylov basis |O_0), ..., |O_{D-1}) with real positive hops.
/// hops()[m-1] is beta_m, the coupling between |O_{m-1}) and |O_m);
/// diagonals()[n] is (O_n|L|O_n).
class KrylovBasis {
 public:
  /// Columns of states must be orthonormal within 1e-10.
  KrylovBasis(Matrix states, std::vector<double> hops, std::vector<double> diagonals);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(states_.cols()); }
  Eigen::Index ambient_size() const noexcept { return states_.rows(); }
  const Matrix& states() const noexcept { return states_; }
  OperatorState state(std::size_t n) const;
  const std::vector<double>& hops() const noexcept { return hops_; }
  const std::vector<double>& diagonals() const noexcept { return diagonals_; }

 private:
  Matrix states_;
  std::vector<double> hops_;
  std::vector<double> diagonals_;
};

struct AmplitudeVector {
  Vector phi;
  double time = 0.0;
  /// 1 - sum |phi_n|^2: weight of the state outside the basis span.
  double leaked_weight = 0.0;

  Eigen::VectorXd probabilities() const { return phi.cwiseAbs2(); }
};

inline constexpr double kDefaultTerminationTolerance = 1e-12;

/// Lanczos tridiagonalization with full reorthogonalization (two classical
/// Gram-Schmidt passes per step). Stops when beta <= term_tol * scale, where
/// scale is the largest of ||L seed|| and every beta seen so far, or when
/// the basis reaches max_dim (capped at the ambient dimension).
///
/// The action must be Hermitian; this is checked on random vectors before
/// the recursion starts.
KrylovBasis lanczos_basis(const StateMap& action, const OperatorState& seed, std::size_t max_dim,
                          double term_tol = kDefaultTerminationTolerance);

/// Max relative asymmetry |(x|Ly) - (Lx|y)| over a few seeded random pairs.
double hermiticity_defect(const StateMap& action, Eigen::Index size, unsigned trials = 4);

/// sum_n n |O_n)(O_n| as a dense ambient-space operator.
LiouvillianMatrix krylov_operator(const KrylovBasis& basis);

/// phi_n = (O_n | state).
AmplitudeVector project(const OperatorState& state, const KrylovBasis& basis, double time);

}  // namespace kcomplex
