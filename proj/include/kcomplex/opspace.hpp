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

// Operator-space linear algebra. A d x d operator is vectorized row-major,
// index (m, n) -> m * d + n, so that the Liouvillian of H is literally
// H (x) 1 - 1 (x) H^T under the standard Kronecker convention.

#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

namespace kcomplex {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// A linear map on vectorized operator states.
using StateMap = std::function<Vector(const Vector&)>;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kNormalizationTolerance = 1e-10;

/// Largest entrywise |A - A^dagger|.
double hermitian_defect(const Matrix& a);

/// Square complex matrix with finite entries. Hamiltonian-flagged instances
/// are additionally Hermitian within kHermitianTolerance.
class OperatorMatrix {
 public:
  explicit OperatorMatrix(Matrix entries);

  /// Validates Hermiticity and rejects (never symmetrizes) violations.
  static OperatorMatrix hamiltonian(Matrix entries);

  Eigen::Index dim() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }
  bool is_hamiltonian() const noexcept { return hamiltonian_; }

 private:
  Matrix entries_;
  bool hamiltonian_ = false;
};

/// Vectorized operator |O). The normalization flag is evaluated at
/// construction under the trace inner product.
class OperatorState {
 public:
  explicit OperatorState(Vector entries);

  /// Returns v / ||v||; a zero vector is invalid-input.
  static OperatorState normalized(const Vector& v);

  Eigen::Index size() const noexcept { return entries_.size(); }
  const Vector& entries() const noexcept { return entries_; }
  bool is_normalized() const noexcept { return normalized_; }
  double norm() const { return entries_.norm(); }

 private:
  Vector entries_;
  bool normalized_ = false;
};

/// Dense d^2 x d^2 superoperator.
class LiouvillianMatrix {
 public:
  explicit LiouvillianMatrix(Matrix entries);

  Eigen::Index size() const noexcept { return entries_.rows(); }
  const Matrix& entries() const noexcept { return entries_; }

  OperatorState apply(const OperatorState& state) const;
  StateMap as_map() const;

 private:
  Matrix entries_;
};

OperatorState vectorize(const OperatorMatrix& a);
OperatorMatrix unvectorize(const OperatorState& state);

/// (A|B) = Tr(A^dagger B); conjugate-linear in the first argument.
Complex inner(const OperatorState& a, const OperatorState& b);

/// HO - OH.
OperatorMatrix commutator(const OperatorMatrix& h, const OperatorMatrix& o);

LiouvillianMatrix build_liouvillian(const OperatorMatrix& h);

/// Matrix-free action |O) -> |[H, O]) on row-major vectorized states.
StateMap commutator_map(const OperatorMatrix& h);

}  // namespace kcomplex
