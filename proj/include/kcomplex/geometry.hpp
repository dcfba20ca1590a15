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

// Circuit-complexity geometry on the group of SU(2) propagators.
//
// Coordinates are the Euler angles of U = e^{i psi S_z} e^{i theta S_x}
// e^{i varphi S_z}; theta is the polar angle measured from the south pole.
// With gate-cost anisotropy lambda on the z generator, minimizing over
// varphi leaves the Berger-sphere metric
//
//   ds^2 = ell^2 (dtheta^2 + G(theta) dpsi^2),
//   G(theta) = lambda^2 sin^2 theta / (1 + (lambda^2 - 1) cos^2 theta).
//
// The height of a latitude measured from the south pole is
//
//   h(theta) = ell int_0^theta sqrt(1 - cos^2 / (lambda^{-2} sin^2 + cos^2)^3),
//
// which is real for every theta iff lambda^2 <= 3/2.

#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "kcomplex/symmetry.hpp"

namespace kcomplex {

/// sqrt(3/2): largest lambda for which the height integrand stays real.
inline constexpr double kMaxLambda = 1.2247448713915890491;

struct DeformationParams {
  double lambda = 1.0;
  double ell = 1.0;
};

/// Domain-error for lambda outside (0, kMaxLambda]; invalid-input for a bad ell.
void validate(const DeformationParams& d);

/// Metric coefficients in (theta, psi[, varphi]).
struct MetricSample {
  double theta = 0.0;
  Eigen::MatrixXd components;
};

/// 3 x 3 form: ell^2 (dtheta^2 + dpsi^2 + dvarphi^2 + 2 cos(theta) dvarphi dpsi)
///              + ell^2 (lambda^2 - 1)(cos(theta) dvarphi + dpsi)^2.
MetricSample full_metric(const EulerAngles& a, double lambda, double ell);

struct ReducedMetric {
  MetricSample metric;
  /// dvarphi/dpsi that minimizes ds^2 at fixed (dtheta, dpsi).
  double slope = 0.0;
};

ReducedMetric reduce_metric(double theta, double lambda, double ell);

/// Radicand 1 - cos^2 / (lambda^{-2} sin^2 + cos^2)^3 (may be negative for
/// lambda > kMaxLambda).
double height_radicand(double theta, double lambda);

/// Adaptive Gauss-Kronrod quadrature of h(theta), absolute tolerance 1e-10.
double height(double theta, const DeformationParams& d);

/// h(theta_n) at the strip centers theta_n = arccos(1 - n / ell), n = 0..2 ell.
std::vector<double> height_weights(const DeformationParams& d);

/// Radius of the surface of revolution with the same meridian length
/// element: r(theta) = ell lambda sin(theta) / sqrt(1 + (lambda^2 - 1) cos^2 theta).
double profile_radius(double theta, double lambda, double ell);

/// h(theta) tabulated on a uniform grid over [0, pi] with monotone cubic
/// (PCHIP) interpolation.
class HeightTable {
 public:
  explicit HeightTable(const DeformationParams& d, std::size_t points = 2048);

  double operator()(double theta) const;

  const std::vector<double>& thetas() const noexcept { return thetas_; }
  const std::vector<double>& heights() const noexcept { return heights_; }
  const DeformationParams& params() const noexcept { return params_; }

 private:
  DeformationParams params_;
  std::vector<double> thetas_;
  std::vector<double> heights_;
  std::vector<double> slopes_;
};

/// Geodesic distance on the reduced metric. lambda = 1 is the round-sphere
/// closed form ell * central angle; lambda != 1 uses shooting. Endpoints at a
/// pole are joined by the meridian, of length ell |dtheta| for every lambda.
double geodesic_length(const EulerAngles& from, const EulerAngles& to, double lambda, double ell);

struct GeodesicSolution {
  double length = 0.0;
  /// Initial direction at the start point, measured from +theta toward +psi.
  double bearing = 0.0;
  int newton_iterations = 0;
  /// max | theta'^2 + G psi'^2 - 1 | along the path (unit-speed invariant).
  double speed_drift = 0.0;
};

/// Shooting on the geodesic equations with the Clairaut momentum G psi'
/// held fixed, continued in lambda from the round-sphere great circle.
/// Throws numerical-error when Newton does not converge to 1e-10.
GeodesicSolution geodesic_shooting(const EulerAngles& from, const EulerAngles& to, double lambda,
                                   double ell);

/// k (cosh theta - 1).
double hyperbolic_height(double theta, double k);

}  // namespace kcomplex
