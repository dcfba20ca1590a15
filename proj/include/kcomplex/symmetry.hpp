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

// Closed-form SU(2) and SU(1,1) structures in Krylov coordinates. Index n of
// a vector or matrix is the Krylov state |O_n); |O_0) is the lowest-weight
// state (the south pole).

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "kcomplex/lanczos.hpp"
#include "kcomplex/opspace.hpp"

namespace kcomplex {

/// Spin ell (2 ell a positive integer) in a field B (inverse time).
struct SU2Params {
  double ell = 0.5;
  double field = 1.0;
};

/// Bargmann index k > 0, truncated to n_max Krylov states.
struct SU11Params {
  double k = 0.5;
  double field = 1.0;
  std::size_t n_max = 0;
};

struct EulerAngles {
  double theta = 0.0;
  double psi = 0.0;
  double varphi = 0.0;
};

/// Throws invalid-input unless 2 ell is a positive integer and B is finite.
void validate(const SU2Params& p);
void validate(const SU11Params& p);

/// 2 ell + 1.
std::size_t su2_dimension(const SU2Params& p);

struct SU2Generators {
  Matrix sx;
  Matrix sy;
  Matrix sz;
  Matrix splus;
  Matrix sminus;
  /// The Krylov operator diag(0, 1, ..., 2 ell).
  Matrix krylov;
};

/// S^+ = sum_n b_n |n+1)(n|, b_n = sqrt((n+1)(2 ell - n)), S_x = (S^+ + S^-)/2,
/// S_y = (S^+ - S^-)/(2i), S_z = K - ell.
SU2Generators su2_generators(const SU2Params& p);

/// B (S^+ + S^-): the Krylov chain with hops B b_n.
Matrix su2_chain_liouvillian(const SU2Params& p);

struct SU11Generators {
  Matrix kx;
  Matrix ky;
  Matrix k0;
  Matrix kplus;
  Matrix kminus;
  Matrix krylov;
};

/// Ladder entries sqrt((n+1)(2k + n)) truncated to n_max states.
SU11Generators su11_generators(const SU11Params& p);

/// Coherent-state amplitudes phi_n = e^{-i ell (varphi + psi)} cos^{2 ell}(theta/2)
/// sqrt(C(2 ell, n)) mu^n with mu = i tan(theta/2) e^{i psi}.
AmplitudeVector su2_amplitudes(const SU2Params& p, const EulerAngles& a);

inline constexpr double kSU11TailThreshold = 1e-12;

/// Weight of the SU(1,1) coherent state on n >= n_max.
double su11_tail_mass(double k, double theta, std::size_t n_max);

/// Smallest n whose cumulative coherent weight at theta_max reaches
/// 1 - kSU11TailThreshold, doubled. Truncation-error when the mean index
/// k (cosh theta_max - 1) exceeds 1e7.
std::size_t su11_truncation(double k, double theta_max);

/// SU(1,1) coherent amplitudes truncated at n_max; leaked_weight carries the
/// tail mass. Throws truncation-error when the tail exceeds kSU11TailThreshold.
AmplitudeVector su11_amplitudes(const SU11Params& p, const EulerAngles& a);

/// ell (1 - cos Bt).
double analytic_ck(const SU2Params& p, double t);
/// k (cosh Bt - 1).
double analytic_ck(const SU11Params& p, double t);
/// ell B t.
double analytic_circuit_complexity(const SU2Params& p, double t);
/// k B t.
double analytic_circuit_complexity(const SU11Params& p, double t);

/// (<S_x>, <S_y>, <S_z>) of Krylov amplitudes.
Eigen::Vector3d spin_expectation(const Vector& phi, const SU2Params& p);

inline constexpr double kCoherenceTolerance = 1e-6;

/// Recovers (theta, psi) of a spin coherent state; varphi is returned as 0.
/// theta = atan2(|<S_perp>|, -<S_z>), psi = -atan2(<S_y>, <S_x>) - pi/2
/// folded into [-pi, pi), and psi = 0 at the poles. Throws not-coherent
/// when | |<S>| - ell | > kCoherenceTolerance.
EulerAngles angles_from_state(const AmplitudeVector& phi, const SU2Params& p);

/// |f_n(theta, psi)|^2 = |phi_n|^2 at varphi = 0, n = 0..2 ell.
std::vector<double> coherent_overlap_weights(const SU2Params& p, const EulerAngles& a);

/// arccos(1 - n / ell).
double strip_center(const SU2Params& p, std::size_t n);

/// argmax over theta in [0, pi] of |f_n|^2 by grid search and golden-section
/// refinement.
double weight_peak_theta(const SU2Params& p, std::size_t n);

/// Folds an angle into [-pi, pi).
double fold_angle(double x);

}  // namespace kcomplex
