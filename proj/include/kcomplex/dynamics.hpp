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
#include <span>
#include <vector>

#include "kcomplex/geometry.hpp"
#include "kcomplex/lanczos.hpp"
#include "kcomplex/opspace.hpp"
#include "kcomplex/symmetry.hpp"

namespace kcomplex {

/// e^{i t G} for Hermitian G, by eigendecomposition.
Matrix hermitian_exponential(const Matrix& generator, double t);

struct ScheduleSegment {
  Matrix generator;
  double duration = 0.0;
};

/// Piecewise-constant sequence of Hermitian generators. Each segment is
/// diagonalized once at construction.
class LiouvillianSchedule {
 public:
  explicit LiouvillianSchedule(std::vector<ScheduleSegment> segments);

  std::size_t size() const noexcept { return segments_.size(); }
  Eigen::Index dim() const noexcept { return segments_.front().generator.rows(); }
  double total_time() const noexcept { return total_time_; }
  const ScheduleSegment& segment(std::size_t i) const { return segments_.at(i); }

  /// Time-ordered propagator U(t) = e^{i L_k (t - t_k)} ... e^{i L_0 t_1}.
  Matrix propagator(double t) const;

 private:
  friend std::vector<OperatorState> propagate(const LiouvillianSchedule&, const OperatorState&,
                                              std::span<const double>);

  struct Spectral {
    Eigen::VectorXd eigenvalues;
    Matrix eigenvectors;
  };

  std::size_t segment_index(double t) const;
  Vector apply_segment(std::size_t k, const Vector& v, double dt) const;

  std::vector<ScheduleSegment> segments_;
  std::vector<Spectral> spectra_;
  std::vector<double> starts_;
  double total_time_ = 0.0;
};

/// Solves -i d/dt |O) = L |O), i.e. |O(t)) = e^{i L t} |O(0)) per segment.
/// Grid times must lie in [0, total_time]; the norm is checked to 1e-10.
std::vector<OperatorState> propagate(const LiouvillianSchedule& schedule, const OperatorState& seed,
                                     std::span<const double> grid);

/// sum_n n |phi_n|^2.
double k_complexity(const AmplitudeVector& phi);
/// sum_n w_n |phi_n|^2, e.g. with w_n = h(theta_n).
double k_complexity(const AmplitudeVector& phi, std::span<const double> weights);

/// e^{-i pi S_y / 2} in Krylov coordinates.
Matrix dual_rotation(const SU2Params& p);

/// |O'_n) = e^{-i pi S_y / 2} |O_n), i.e. columns Q R. Hops and diagonals are
/// carried over unchanged: they describe the rotated generator R L R^dagger.
KrylovBasis dual_basis(const KrylovBasis& basis, const SU2Params& p);

/// Series sampled on a shared time grid. Optional series are empty when not
/// computed.
struct ComplexityTrace {
  std::vector<double> times;
  std::vector<double> ck;
  std::vector<double> ck_analytic;
  std::vector<double> ck_prime;
  std::vector<double> circuit;
  std::vector<double> ck_deformed;
  std::vector<double> theta;
  std::vector<double> psi;
  std::vector<double> leak;
};

/// n uniform points on [0, t_max], endpoints included.
std::vector<double> uniform_grid(double t_max, std::size_t points = 512);

/// L = B S_x until t_star, then L' = B S_z, from the south pole. C_K uses
/// |O_n), C_K' the dual basis; circuit is the geodesic length from the
/// initial operator to the tomographically recovered (theta, psi).
ComplexityTrace quench_trace(const SU2Params& p, double t_star, std::span<const double> grid,
                             const std::optional<DeformationParams>& deformation = std::nullopt);

/// Constant L = B S_x from the south pole: numerical C_K (propagate, then
/// project onto the Lanczos basis), analytic overlay, C = ell B t, tomography
/// angles, and the height-weighted C_K when a deformation is given.
ComplexityTrace symmetry_trace(const SU2Params& p, std::span<const double> grid,
                               const std::optional<DeformationParams>& deformation = std::nullopt);

/// Truncated SU(1,1) evolution under B K_x. n_max = 0 selects the adaptive
/// truncation for the largest grid time. leak is the weight on the upper
/// half of the truncation window; above 1e-10 it is a truncation-error.
ComplexityTrace symmetry_trace(const SU11Params& p, std::span<const double> grid);

inline constexpr double kLeakThreshold = 1e-10;
/// Largest dense truncation the SU(1,1) trace will diagonalize.
inline constexpr std::size_t kMaxSU11Truncation = 4096;

}  // namespace kcomplex
