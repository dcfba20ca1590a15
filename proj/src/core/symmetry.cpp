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
#include "kcomplex/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kcomplex/error.hpp"

namespace kcomplex {

namespace {

using std::numbers::pi;

constexpr Complex kI(0.0, 1.0);
constexpr double kMaxSU11Search = 1e7;

int twice_ell(double ell) { return static_cast<int>(std::lround(2.0 * ell)); }

double log_binomial(int n, int m) {
  return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
}

double su11_log_weight(double k, double log_cosh, double log_tanh, std::size_t n) {
  const double nd = static_cast<double>(n);
  return -4.0 * k * log_cosh + std::lgamma(2.0 * k + nd) - std::lgamma(2.0 * k) -
         std::lgamma(nd + 1.0) + 2.0 * nd * log_tanh;
}

SU11Generators make_su11(double k, std::size_t count) {
  const auto n = static_cast<Eigen::Index>(count);
  SU11Generators g;
  g.kplus = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double m = static_cast<double>(i);
    g.kplus(i + 1, i) = std::sqrt((m + 1.0) * (2.0 * k + m));
  }
  g.kminus = g.kplus.adjoint();
  g.kx = (g.kplus + g.kminus) / 2.0;
  g.ky = (g.kplus - g.kminus) / (2.0 * kI);
  g.krylov = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g.krylov(i, i) = static_cast<double>(i);
  g.k0 = g.krylov + k * Matrix::Identity(n, n);
  return g;
}

}  // namespace

double fold_angle(double x) {
  double y = std::fmod(x + pi, 2.0 * pi);
  if (y < 0.0) y += 2.0 * pi;
  return y - pi;
}

void validate(const SU2Params& p) {
  const double twice = 2.0 * p.ell;
  require(std::isfinite(p.ell) && p.ell > 0.0 && std::abs(twice - std::round(twice)) <= 1e-12,
          "ell must be a positive half-integer, got " + std::to_string(p.ell));
  require(std::isfinite(p.field), "field B must be finite");
}

void validate(const SU11Params& p) {
  require(std::isfinite(p.k) && p.k > 0.0, "Bargmann index k must be positive, got " + std::to_string(p.k));
  require(std::isfinite(p.field), "field B must be finite");
}

std::size_t su2_dimension(const SU2Params& p) {
  validate(p);
  return static_cast<std::size_t>(twice_ell(p.ell)) + 1;
}

SU2Generators su2_generators(const SU2Params& p) {
  const auto n = static_cast<Eigen::Index>(su2_dimension(p));
  const int two_l = twice_ell(p.ell);
  const double ell = two_l / 2.0;
  SU2Generators g;
  g.splus = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double m = static_cast<double>(i);
    g.splus(i + 1, i) = std::sqrt((m + 1.0) * (two_l - m));
  }
  g.sminus = g.splus.adjoint();
  g.sx = (g.splus + g.sminus) / 2.0;
  g.sy = (g.splus - g.sminus) / (2.0 * kI);
  g.krylov = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) g.krylov(i, i) = static_cast<double>(i);
  g.sz = g.krylov - ell * Matrix::Identity(n, n);
  return g;
}

Matrix su2_chain_liouvillian(const SU2Params& p) {
  const SU2Generators g = su2_generators(p);
  return p.field * (g.splus + g.sminus);
}

SU11Generators su11_generators(const SU11Params& p) {
  validate(p);
  require(p.n_max >= 1, "SU(1,1) truncation n_max must be at least 1");
  return make_su11(p.k, p.n_max);
}

AmplitudeVector su2_amplitudes(const SU2Params& p, const EulerAngles& a) {
  const int two_l = static_cast<int>(su2_dimension(p)) - 1;
  const double ell = two_l / 2.0;
  const double c = std::cos(a.theta / 2.0);
  const double s = std::sin(a.theta / 2.0);
  AmplitudeVector out;
  out.phi.resize(two_l + 1);
  const Complex global = std::exp(-kI * (ell * (a.varphi + a.psi)));
  for (int n = 0; n <= two_l; ++n) {
    // cos^{2l}(theta/2) tan^n(theta/2) = cos^{2l-n} sin^n, finite at theta = pi.
    const double magnitude = std::exp(0.5 * log_binomial(two_l, n)) * std::pow(c, two_l - n) * std::pow(s, n);
    const Complex phase = std::pow(kI, n) * std::exp(kI * (n * a.psi));
    out.phi(n) = global * magnitude * phase;
  }
  out.leaked_weight = 1.0 - out.phi.squaredNorm();
  return out;
}

double su11_tail_mass(double k, double theta, std::size_t n_max) {
  require(k > 0.0, "Bargmann index k must be positive");
  require(theta >= 0.0 && std::isfinite(theta), "SU(1,1) theta must be finite and non-negative");
  if (theta == 0.0) return n_max == 0 ? 1.0 : 0.0;
  const double log_cosh = std::log(std::cosh(theta / 2.0));
  const double log_tanh = std::log(std::tanh(theta / 2.0));
  // Terms rise to the mode and then decay geometrically with ratio tanh^2.
  const double tau2 = std::tanh(theta / 2.0) * std::tanh(theta / 2.0);
  const double mode = std::max(0.0, (2.0 * k * tau2 - 1.0) / (1.0 - tau2));
  double tail = 0.0;
  const std::size_t budget = std::max<std::size_t>(1'000'000, 10 * n_max);
  for (std::size_t n = n_max; n < n_max + budget; ++n) {
    const double term = std::exp(su11_log_weight(k, log_cosh, log_tanh, n));
    tail += term;
    if (static_cast<double>(n) > mode && (term <= 1e-17 * tail || term < 1e-300)) return tail;
  }
  // Slowly decaying tail: complement of the head instead.
  double head = 0.0;
  for (std::size_t n = 0; n < n_max; ++n) head += std::exp(su11_log_weight(k, log_cosh, log_tanh, n));
  return std::max(0.0, 1.0 - head);
}

std::size_t su11_truncation(double k, double theta_max) {
  require(k > 0.0, "Bargmann index k must be positive");
  require(theta_max >= 0.0 && std::isfinite(theta_max), "theta_max must be finite and non-negative");
  if (theta_max == 0.0) return 2;
  const double mean = k * (std::cosh(theta_max) - 1.0);
  if (!(mean <= kMaxSU11Search)) {
    fail(ErrorCode::TruncationError, "SU(1,1) coherent state at theta=" + std::to_string(theta_max) +
                                         " has mean Krylov index " + std::to_string(mean) +
                                         "; no practical truncation exists");
  }
  const double log_cosh = std::log(std::cosh(theta_max / 2.0));
  const double log_tanh = std::log(std::tanh(theta_max / 2.0));
  double cumulative = 0.0;
  std::size_t n = 0;
  while (1.0 - cumulative > kSU11TailThreshold) {
    cumulative += std::exp(su11_log_weight(k, log_cosh, log_tanh, n));
    ++n;
  }
  return 2 * std::max<std::size_t>(n, 1);
}

AmplitudeVector su11_amplitudes(const SU11Params& p, const EulerAngles& a) {
  validate(p);
  require(p.n_max >= 1, "SU(1,1) truncation n_max must be at least 1");
  require(a.theta >= 0.0 && std::isfinite(a.theta), "SU(1,1) theta must be finite and non-negative");
  const auto n = static_cast<Eigen::Index>(p.n_max);
  AmplitudeVector out;
  out.phi = Vector::Zero(n);
  if (a.theta == 0.0) {
    out.phi(0) = std::exp(kI * (p.k * a.psi));
    return out;
  }
  const double log_cosh = std::log(std::cosh(a.theta / 2.0));
  const double log_tanh = std::log(std::tanh(a.theta / 2.0));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ni = static_cast<std::size_t>(i);
    const double magnitude = std::exp(0.5 * su11_log_weight(p.k, log_cosh, log_tanh, ni));
    const double phase = p.k * a.psi + static_cast<double>(i) * (pi / 2.0 + a.psi);
    out.phi(i) = magnitude * std::exp(kI * phase);
  }
  out.leaked_weight = su11_tail_mass(p.k, a.theta, p.n_max);
  if (out.leaked_weight > kSU11TailThreshold) {
    fail(ErrorCode::TruncationError,
         "SU(1,1) tail mass " + std::to_string(out.leaked_weight) + " exceeds threshold at n_max=" +
             std::to_string(p.n_max) + "; use n_max >= " + std::to_string(su11_truncation(p.k, a.theta)));
  }
  return out;
}

double analytic_ck(const SU2Params& p, double t) {
  validate(p);
  return p.ell * (1.0 - std::cos(p.field * t));
}

double analytic_ck(const SU11Params& p, double t) {
  validate(p);
  return p.k * (std::cosh(p.field * t) - 1.0);
}

double analytic_circuit_complexity(const SU2Params& p, double t) {
  validate(p);
  return p.ell * p.field * t;
}

double analytic_circuit_complexity(const SU11Params& p, double t) {
  validate(p);
  return p.k * p.field * t;
}

Eigen::Vector3d spin_expectation(const Vector& phi, const SU2Params& p) {
  const SU2Generators g = su2_generators(p);
  require(phi.size() == g.sz.rows(), "amplitude vector length " + std::to_string(phi.size()) +
                                         " does not match 2*ell+1 = " + std::to_string(g.sz.rows()));
  return {phi.dot(g.sx * phi).real(), phi.dot(g.sy * phi).real(), phi.dot(g.sz * phi).real()};
}

EulerAngles angles_from_state(const AmplitudeVector& phi, const SU2Params& p) {
  const Eigen::Vector3d s = spin_expectation(phi.phi, p);
  const double length = s.norm();
  if (std::abs(length - p.ell) > kCoherenceTolerance) {
    fail(ErrorCode::NotCoherent, "state is not a spin coherent state: |<S>| = " + std::to_string(length) +
                                     ", ell = " + std::to_string(p.ell));
  }
  const double transverse = std::hypot(s.x(), s.y());
  EulerAngles a;
  a.theta = std::atan2(transverse, -s.z());
  if (transverse > 1e-12 * p.ell) a.psi = fold_angle(-std::atan2(s.y(), s.x()) - pi / 2.0);
  return a;
}

std::vector<double> coherent_overlap_weights(const SU2Params& p, const EulerAngles& a) {
  const AmplitudeVector amp = su2_amplitudes(p, {a.theta, a.psi, 0.0});
  std::vector<double> w(static_cast<std::size_t>(amp.phi.size()));
  for (Eigen::Index i = 0; i < amp.phi.size(); ++i) w[static_cast<std::size_t>(i)] = std::norm(amp.phi(i));
  return w;
}

double strip_center(const SU2Params& p, std::size_t n) {
  require(n < su2_dimension(p), "Krylov index out of range for ell");
  return std::acos(std::clamp(1.0 - static_cast<double>(n) / p.ell, -1.0, 1.0));
}

double weight_peak_theta(const SU2Params& p, std::size_t n) {
  require(n < su2_dimension(p), "Krylov index out of range for ell");
  auto weight = [&](double theta) { return coherent_overlap_weights(p, {theta, 0.0, 0.0})[n]; };
  constexpr int kGrid = 2048;
  int best = 0;
  double best_w = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double w = weight(pi * i / kGrid);
    if (w > best_w) {
      best_w = w;
      best = i;
    }
  }
  double lo = pi * std::max(0, best - 1) / kGrid;
  double hi = pi * std::min(kGrid, best + 1) / kGrid;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = weight(x1);
  double f2 = weight(x2);
  while (hi - lo > 1e-12) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = weight(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = weight(x1);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace kcomplex
