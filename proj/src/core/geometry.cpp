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
#include "kcomplex/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/numeric/odeint.hpp>

#include "kcomplex/error.hpp"
#include "log.hpp"

namespace kcomplex {

namespace {

using std::numbers::pi;

constexpr double kHeightTolerance = 1e-10;
constexpr double kRadicandClampWindow = 1e-12;
constexpr double kPoleEpsilon = 1e-12;

void validate_lambda(double lambda) {
  if (!(std::isfinite(lambda) && lambda > 0.0 && lambda <= kMaxLambda)) {
    fail(ErrorCode::DomainError, "lambda = " + std::to_string(lambda) +
                                     " is outside (0, sqrt(3/2)]; the height integrand becomes imaginary");
  }
}

// Berger-sphere coefficient G(theta) and its derivative.
double berger_g(double theta, double lambda) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double l2 = lambda * lambda;
  return l2 * s * s / (1.0 + (l2 - 1.0) * c * c);
}

double berger_dg(double theta, double lambda) {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  const double l2 = lambda * lambda;
  const double d = 1.0 + (l2 - 1.0) * c * c;
  return 2.0 * l2 * l2 * s * c / (d * d);
}

Eigen::Vector3d embed(double theta, double psi) {
  return {std::sin(theta) * std::cos(psi), std::sin(theta) * std::sin(psi), std::cos(theta)};
}

bool at_pole(double theta) { return theta <= kPoleEpsilon || theta >= pi - kPoleEpsilon; }

double round_sphere_angle(const EulerAngles& a, const EulerAngles& b) {
  const Eigen::Vector3d p = embed(a.theta, a.psi);
  const Eigen::Vector3d q = embed(b.theta, b.psi);
  return std::atan2(p.cross(q).norm(), p.dot(q));
}

// Unit-speed geodesic endpoint in units of ell. State (theta, psi, theta').
struct Endpoint {
  double theta;
  double psi;
  double dtheta;
  double dpsi;
  double speed_drift;
};

Endpoint shoot(double theta0, double psi0, double bearing, double length, double lambda) {
  const double g0 = berger_g(theta0, lambda);
  const double momentum = std::sqrt(g0) * std::sin(bearing);
  using State = std::array<double, 3>;
  State y{theta0, psi0, std::cos(bearing)};
  if (length == 0.0) return {theta0, psi0, y[2], momentum / g0, 0.0};
  auto rhs = [&](const State& x, State& dx, double) {
    const double g = berger_g(x[0], lambda);
    dx[0] = x[2];
    dx[1] = momentum / g;
    dx[2] = 0.5 * berger_dg(x[0], lambda) * momentum * momentum / (g * g);
  };
  double drift = 0.0;
  auto observe = [&](const State& x, double) {
    const double g = berger_g(x[0], lambda);
    drift = std::max(drift, std::abs(x[2] * x[2] + momentum * momentum / g - 1.0));
  };
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(1e-13, 1e-13, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(stepper, rhs, y, 0.0, length, length / 64.0, observe);
  const double g = berger_g(y[0], lambda);
  return {y[0], y[1], y[2], momentum / g, drift};
}

}  // namespace

void validate(const DeformationParams& d) {
  validate(SU2Params{d.ell, 1.0});
  validate_lambda(d.lambda);
}

MetricSample full_metric(const EulerAngles& a, double lambda, double ell) {
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  const double c = std::cos(a.theta);
  const double e = lambda * lambda - 1.0;
  const double l2 = ell * ell;
  MetricSample m;
  m.theta = a.theta;
  m.components = Eigen::MatrixXd::Zero(3, 3);
  m.components(0, 0) = l2;
  m.components(1, 1) = l2 * (1.0 + e);
  m.components(2, 2) = l2 * (1.0 + e * c * c);
  m.components(1, 2) = m.components(2, 1) = l2 * (c + e * c);
  return m;
}

ReducedMetric reduce_metric(double theta, double lambda, double ell) {
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double l2 = lambda * lambda;
  const double d = 1.0 + (l2 - 1.0) * c * c;
  ReducedMetric r;
  r.slope = -l2 * c / d;
  r.metric.theta = theta;
  r.metric.components = Eigen::MatrixXd::Zero(2, 2);
  r.metric.components(0, 0) = ell * ell;
  r.metric.components(1, 1) = ell * ell * l2 * s * s / d;
  return r;
}

double height_radicand(double theta, double lambda) {
  // 1 - c^2/d^3 with d = 1 - mu s^2, mu = 1 - lambda^-2, expanded so that
  // the s^2 factor is explicit and nothing cancels near the poles.
  const double s = std::sin(theta);
  const double s2 = s * s;
  const double mu = 1.0 - 1.0 / (lambda * lambda);
  const double d = 1.0 - mu * s2;
  const double p = 1.0 - 3.0 * mu + mu * mu * s2 * (3.0 - mu * s2);
  return s2 * p / (d * d * d);
}

double height(double theta, const DeformationParams& d) {
  validate(d);
  require(std::isfinite(theta) && theta >= 0.0 && theta <= pi,
          "height requires theta in [0, pi], got " + std::to_string(theta));
  if (theta == 0.0) return 0.0;
  double worst_clamp = 0.0;
  auto integrand = [&](double x) {
    const double r = height_radicand(x, d.lambda);
    if (r >= 0.0) return std::sqrt(r);
    if (r < -kRadicandClampWindow) {
      fail(ErrorCode::DomainError, "height integrand is imaginary at theta' = " + std::to_string(x) +
                                       " (radicand " + std::to_string(r) + ")");
    }
    worst_clamp = std::max(worst_clamp, -r);
    return 0.0;
  };
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(integrand, 0.0, theta, 20, 1e-13, &error);
  if (!(error <= kHeightTolerance)) {
    fail(ErrorCode::NumericalError, "height quadrature error estimate " + std::to_string(error) +
                                        " exceeds " + std::to_string(kHeightTolerance));
  }
  // Rounding alone leaves |radicand| at the 1e-16 level near the poles.
  if (worst_clamp > 64 * std::numeric_limits<double>::epsilon()) {
    detail::logger().warn("height: clamped negative radicand {:.3e} to 0 (lambda={})", -worst_clamp, d.lambda);
  }
  return d.ell * value;
}

std::vector<double> height_weights(const DeformationParams& d) {
  validate(d);
  const SU2Params p{d.ell, 1.0};
  const std::size_t count = su2_dimension(p);
  std::vector<double> w(count);
  for (std::size_t n = 0; n < count; ++n) w[n] = height(strip_center(p, n), d);
  return w;
}

double profile_radius(double theta, double lambda, double ell) {
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  const double c = std::cos(theta);
  return ell * lambda * std::sin(theta) / std::sqrt(1.0 + (lambda * lambda - 1.0) * c * c);
}

HeightTable::HeightTable(const DeformationParams& d, std::size_t points) : params_(d) {
  validate(d);
  require(points >= 4, "height table needs at least 4 points");
  thetas_.resize(points);
  heights_.resize(points);
  slopes_.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    thetas_[i] = pi * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  heights_[0] = 0.0;
  for (std::size_t i = 1; i < points; ++i) {
    // Piecewise integration keeps the table monotone by construction.
    const double a = thetas_[i - 1];
    const double b = thetas_[i];
    const double piece = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        [&](double x) { return std::sqrt(std::max(0.0, height_radicand(x, d.lambda))); }, a, b, 10, 1e-15);
    heights_[i] = heights_[i - 1] + d.ell * piece;
  }
  // Exact slopes, limited per interval (Fritsch-Carlson) so that every
  // Hermite piece stays monotone.
  const double step = thetas_[1] - thetas_[0];
  for (std::size_t i = 0; i < points; ++i) {
    slopes_[i] = d.ell * std::sqrt(std::max(0.0, height_radicand(thetas_[i], d.lambda)));
  }
  for (std::size_t i = 0; i + 1 < points; ++i) {
    const double secant = (heights_[i + 1] - heights_[i]) / step;
    if (secant <= 0.0) {
      slopes_[i] = slopes_[i + 1] = 0.0;
      continue;
    }
    const double a = slopes_[i] / secant;
    const double b = slopes_[i + 1] / secant;
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      slopes_[i] *= tau;
      slopes_[i + 1] *= tau;
    }
  }
}

double HeightTable::operator()(double theta) const {
  require(theta >= 0.0 && theta <= pi, "height table lookup requires theta in [0, pi]");
  const std::size_t n = thetas_.size();
  const double step = thetas_[1] - thetas_[0];
  const auto i = std::min(static_cast<std::size_t>(theta / step), n - 2);
  const double t = (theta - thetas_[i]) / step;
  const double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  const double h10 = t * (1 - t) * (1 - t);
  const double h01 = t * t * (3 - 2 * t);
  const double h11 = t * t * (t - 1);
  return h00 * heights_[i] + h10 * step * slopes_[i] + h01 * heights_[i + 1] + h11 * step * slopes_[i + 1];
}

GeodesicSolution geodesic_shooting(const EulerAngles& from, const EulerAngles& to, double lambda,
                                   double ell) {
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  require(ell > 0.0, "ell must be positive");
  GeodesicSolution sol;
  const double central = round_sphere_angle(from, to);
  if (central == 0.0) return sol;
  if (at_pole(from.theta) || at_pole(to.theta)) {
    sol.length = ell * std::abs(to.theta - from.theta);
    sol.bearing = to.theta >= from.theta ? 0.0 : pi;
    return sol;
  }

  // Great-circle initial direction in the local (e_theta, e_psi) frame.
  const Eigen::Vector3d p = embed(from.theta, from.psi);
  const Eigen::Vector3d q = embed(to.theta, to.psi);
  const Eigen::Vector3d e_theta(std::cos(from.theta) * std::cos(from.psi),
                                std::cos(from.theta) * std::sin(from.psi), -std::sin(from.theta));
  const Eigen::Vector3d e_psi(-std::sin(from.psi), std::cos(from.psi), 0.0);
  const Eigen::Vector3d tangent = (q - p.dot(q) * p).normalized();
  double bearing = std::atan2(tangent.dot(e_psi), tangent.dot(e_theta));
  double length = central;

  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(lambda - 1.0) / 0.05)));
  for (int step = 1; step <= steps; ++step) {
    const double lam = 1.0 + (lambda - 1.0) * step / steps;
    const double w = std::sqrt(berger_g(to.theta, lam));
    auto residual = [&](double b, double s, Endpoint* end) {
      const Endpoint e = shoot(from.theta, from.psi, b, s, lam);
      if (end != nullptr) *end = e;
      return Eigen::Vector2d(e.theta - to.theta, w * fold_angle(e.psi - to.psi));
    };
    bool converged = false;
    for (int it = 0; it < 60; ++it) {
      Endpoint end{};
      const Eigen::Vector2d r = residual(bearing, length, &end);
      sol.speed_drift = end.speed_drift;
      if (r.norm() <= 1e-12) {
        converged = true;
        break;
      }
      constexpr double h = 1e-7;
      const Eigen::Vector2d dr_db =
          (residual(bearing + h, length, nullptr) - residual(bearing - h, length, nullptr)) / (2 * h);
      Eigen::Matrix2d jac;
      jac.col(0) = dr_db;
      jac.col(1) = Eigen::Vector2d(end.dtheta, w * end.dpsi);
      const Eigen::Vector2d delta = jac.partialPivLu().solve(-r);
      // Damped update: keep the length positive and the bearing step bounded.
      double scale = 1.0;
      while (length + scale * delta(1) <= 0.0 || std::abs(scale * delta(0)) > 0.5) scale *= 0.5;
      bearing += scale * delta(0);
      length += scale * delta(1);
      ++sol.newton_iterations;
      if (!std::isfinite(bearing) || !std::isfinite(length)) break;
    }
    if (!converged) {
      const Eigen::Vector2d r = residual(bearing, length, nullptr);
      if (!(r.norm() <= 1e-10)) {
        fail(ErrorCode::NumericalError, "geodesic shooting did not converge at lambda=" + std::to_string(lam) +
                                            " (residual " + std::to_string(r.norm()) + ", length " +
                                            std::to_string(length) + ", bearing " + std::to_string(bearing) +
                                            ")");
      }
    }
  }
  if (sol.speed_drift > 1e-8) {
    fail(ErrorCode::NumericalError,
         "geodesic integration lost unit speed (drift " + std::to_string(sol.speed_drift) + ")");
  }
  sol.length = ell * length;
  sol.bearing = bearing;
  return sol;
}

double geodesic_length(const EulerAngles& from, const EulerAngles& to, double lambda, double ell) {
  require(lambda > 0.0 && std::isfinite(lambda), "lambda must be positive");
  require(ell > 0.0, "ell must be positive");
  if (lambda == 1.0) return ell * round_sphere_angle(from, to);
  return geodesic_shooting(from, to, lambda, ell).length;
}

double hyperbolic_height(double theta, double k) {
  require(theta >= 0.0 && std::isfinite(theta), "hyperbolic height requires theta >= 0");
  require(k > 0.0, "Bargmann index k must be positive");
  return k * (std::cosh(theta) - 1.0);
}

}  // namespace kcomplex
