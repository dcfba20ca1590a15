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

#include "kcomplex/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "kcomplex/error.hpp"
#include "log.hpp"

namespace kcomplex {

namespace {

constexpr double kTimeSlack = 1e-12;
constexpr double kNormDriftTolerance = 1e-10;
constexpr Complex kI(0.0, 1.0);

double max_abs(const std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_grid(std::span<const double> grid) {
  require(!grid.empty(), "time grid must be non-empty");
  for (double t : grid) require(std::isfinite(t) && t >= 0.0, "time grid entries must be finite and >= 0");
}

}  // namespace

Matrix hermitian_exponential(const Matrix& generator, double t) {
  require(generator.rows() == generator.cols(), "generator must be square");
  const Eigen::SelfAdjointEigenSolver<Matrix> eig(generator);
  if (eig.info() != Eigen::Success) fail(ErrorCode::NumericalError, "eigendecomposition failed");
  const Vector phases = (kI * t * eig.eigenvalues().cast<Complex>()).array().exp();
  return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

LiouvillianSchedule::LiouvillianSchedule(std::vector<ScheduleSegment> segments)
    : segments_(std::move(segments)) {
  require(!segments_.empty(), "schedule needs at least one segment");
  const Eigen::Index d = segments_.front().generator.rows();
  require(d >= 1, "schedule generators must be non-empty");
  double t = 0.0;
  for (const auto& s : segments_) {
    require(s.generator.rows() == d && s.generator.cols() == d, "schedule generators must share one dimension");
    require(std::isfinite(s.duration) && s.duration >= 0.0, "segment durations must be finite and >= 0");
    const double scale = std::max(1.0, s.generator.cwiseAbs().maxCoeff());
    require(hermitian_defect(s.generator) <= kHermitianTolerance * scale, "schedule generator is not Hermitian");
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(s.generator);
    if (eig.info() != Eigen::Success) fail(ErrorCode::NumericalError, "eigendecomposition failed");
    spectra_.push_back({eig.eigenvalues(), eig.eigenvectors()});
    starts_.push_back(t);
    t += s.duration;
  }
  total_time_ = t;
}

std::size_t LiouvillianSchedule::segment_index(double t) const {
  require(t >= 0.0 && t <= total_time_ + kTimeSlack,
          "time " + std::to_string(t) + " lies outside the schedule [0, " + std::to_string(total_time_) + "]");
  // Last segment whose start is <= t; a boundary time belongs to the earlier
  // segment, so that U(t*) is the pre-quench propagator.
  std::size_t k = 0;
  for (std::size_t i = 1; i < starts_.size(); ++i) {
    if (t > starts_[i]) k = i;
  }
  return k;
}

Vector LiouvillianSchedule::apply_segment(std::size_t k, const Vector& v, double dt) const {
  const Spectral& s = spectra_[k];
  const Vector phases = (kI * dt * s.eigenvalues.cast<Complex>()).array().exp();
  return s.eigenvectors * (phases.asDiagonal() * (s.eigenvectors.adjoint() * v));
}

Matrix LiouvillianSchedule::propagator(double t) const {
  const std::size_t k = segment_index(t);
  Matrix u = Matrix::Identity(dim(), dim());
  for (std::size_t i = 0; i < k; ++i) u = hermitian_exponential(segments_[i].generator, segments_[i].duration) * u;
  return hermitian_exponential(segments_[k].generator, std::min(t, total_time_) - starts_[k]) * u;
}

std::vector<OperatorState> propagate(const LiouvillianSchedule& schedule, const OperatorState& seed,
                                     std::span<const double> grid) {
  require(seed.is_normalized(), "propagation seed must be normalized");
  require(seed.size() == schedule.dim(), "seed dimension " + std::to_string(seed.size()) +
                                             " does not match generator dimension " +
                                             std::to_string(schedule.dim()));
  check_grid(grid);
  // States at each segment start.
  std::vector<Vector> starts{seed.entries()};
  for (std::size_t k = 0; k + 1 < schedule.size(); ++k) {
    starts.push_back(schedule.apply_segment(k, starts.back(), schedule.segments_[k].duration));
  }
  std::vector<OperatorState> out;
  out.reserve(grid.size());
  for (double t : grid) {
    const std::size_t k = schedule.segment_index(t);
    const double dt = std::min(t, schedule.total_time_) - schedule.starts_[k];
    Vector v = schedule.apply_segment(k, starts[k], dt);
    const double drift = std::abs(v.norm() - 1.0);
    if (drift > kNormDriftTolerance) {
      fail(ErrorCode::NumericalError, "propagation lost unitarity (norm drift " + std::to_string(drift) + ")");
    }
    out.emplace_back(std::move(v));
  }
  return out;
}

double k_complexity(const AmplitudeVector& phi) {
  double c = 0.0;
  for (Eigen::Index n = 0; n < phi.phi.size(); ++n) c += static_cast<double>(n) * std::norm(phi.phi(n));
  return c;
}

double k_complexity(const AmplitudeVector& phi, std::span<const double> weights) {
  require(weights.size() == static_cast<std::size_t>(phi.phi.size()),
          "weight count " + std::to_string(weights.size()) + " does not match amplitude count " +
              std::to_string(phi.phi.size()));
  double c = 0.0;
  for (Eigen::Index n = 0; n < phi.phi.size(); ++n) c += weights[static_cast<std::size_t>(n)] * std::norm(phi.phi(n));
  return c;
}

Matrix dual_rotation(const SU2Params& p) {
  const SU2Generators g = su2_generators(p);
  return hermitian_exponential(g.sy, -std::numbers::pi / 2.0);
}

KrylovBasis dual_basis(const KrylovBasis& basis, const SU2Params& p) {
  const std::size_t d = su2_dimension(p);
  require(basis.dim() == d, "dual basis needs a Krylov basis of dimension 2*ell+1 = " + std::to_string(d) +
                                ", got " + std::to_string(basis.dim()));
  return KrylovBasis(basis.states() * dual_rotation(p), basis.hops(), basis.diagonals());
}

std::vector<double> uniform_grid(double t_max, std::size_t points) {
  require(std::isfinite(t_max) && t_max >= 0.0, "t_max must be finite and >= 0");
  require(points >= 2, "time grid needs at least 2 points");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = t_max * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  grid.back() = t_max;
  return grid;
}

ComplexityTrace symmetry_trace(const SU2Params& p, std::span<const double> grid,
                               const std::optional<DeformationParams>& deformation) {
  validate(p);
  check_grid(grid);
  const SU2Generators g = su2_generators(p);
  const Eigen::Index dim = g.sx.rows();
  const Matrix generator = p.field * g.sx;
  const OperatorState seed(Vector::Unit(dim, 0));
  const KrylovBasis basis = lanczos_basis([&](const Vector& v) -> Vector { return generator * v; }, seed,
                                          static_cast<std::size_t>(dim));
  const LiouvillianSchedule schedule({{generator, max_abs(grid)}});
  const std::vector<OperatorState> states = propagate(schedule, seed, grid);

  std::vector<double> weights;
  if (deformation) {
    DeformationParams d = *deformation;
    d.ell = p.ell;
    weights = height_weights(d);
  }

  ComplexityTrace tr;
  tr.times.assign(grid.begin(), grid.end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AmplitudeVector phi = project(states[i], basis, grid[i]);
    tr.ck.push_back(k_complexity(phi));
    tr.ck_analytic.push_back(analytic_ck(p, grid[i]));
    tr.circuit.push_back(analytic_circuit_complexity(p, grid[i]));
    const EulerAngles a = angles_from_state({states[i].entries(), grid[i], 0.0}, p);
    tr.theta.push_back(a.theta);
    tr.psi.push_back(a.psi);
    if (deformation) {
      // A Lanczos basis shorter than 2l+1 (B = 0) only ever populates n = 0.
      AmplitudeVector full = phi;
      full.phi.conservativeResize(dim);
      full.phi.tail(dim - phi.phi.size()).setZero();
      tr.ck_deformed.push_back(k_complexity(full, weights));
    }
  }
  return tr;
}

ComplexityTrace symmetry_trace(const SU11Params& p, std::span<const double> grid) {
  validate(p);
  check_grid(grid);
  SU11Params q = p;
  const double theta_max = std::abs(q.field) * max_abs(grid);
  if (q.n_max == 0) {
    if (q.k * (std::cosh(theta_max) - 1.0) > static_cast<double>(kMaxSU11Truncation)) {
      fail(ErrorCode::TruncationError, "SU(1,1) evolution to B*t=" + std::to_string(theta_max) +
                                           " spreads beyond n_max=" + std::to_string(kMaxSU11Truncation) +
                                           "; shorten the time window");
    }
    q.n_max = su11_truncation(q.k, theta_max);
  }
  require(q.n_max >= 2, "SU(1,1) truncation must keep at least 2 states");
  if (q.n_max > kMaxSU11Truncation) {
    fail(ErrorCode::TruncationError, "SU(1,1) evolution to B*t=" + std::to_string(theta_max) +
                                         " needs n_max=" + std::to_string(q.n_max) + " > " +
                                         std::to_string(kMaxSU11Truncation) + "; shorten the time window");
  }
  const SU11Generators g = su11_generators(q);
  const Eigen::Index dim = g.kx.rows();
  const Matrix generator = q.field * g.kx;
  const OperatorState seed(Vector::Unit(dim, 0));
  const KrylovBasis basis = lanczos_basis([&](const Vector& v) -> Vector { return generator * v; }, seed,
                                          static_cast<std::size_t>(dim));
  const LiouvillianSchedule schedule({{generator, max_abs(grid)}});
  const std::vector<OperatorState> states = propagate(schedule, seed, grid);
  detail::logger().info("su11 trace: k={} n_max={} lanczos D={}", q.k, q.n_max, basis.dim());

  ComplexityTrace tr;
  tr.times.assign(grid.begin(), grid.end());
  const Eigen::Index upper = dim / 2;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AmplitudeVector phi = project(states[i], basis, grid[i]);
    tr.ck.push_back(k_complexity(phi));
    tr.ck_analytic.push_back(analytic_ck(q, grid[i]));
    tr.circuit.push_back(analytic_circuit_complexity(q, grid[i]));
    const double leak = states[i].entries().tail(dim - upper).squaredNorm();
    tr.leak.push_back(leak);
    if (leak > kLeakThreshold) {
      fail(ErrorCode::TruncationError, "SU(1,1) truncation leak " + std::to_string(leak) + " at t=" +
                                           std::to_string(grid[i]) + " exceeds " +
                                           std::to_string(kLeakThreshold) + " with n_max=" +
                                           std::to_string(q.n_max));
    }
  }
  return tr;
}

ComplexityTrace quench_trace(const SU2Params& p, double t_star, std::span<const double> grid,
                             const std::optional<DeformationParams>& deformation) {
  validate(p);
  check_grid(grid);
  require(std::isfinite(t_star) && t_star >= 0.0, "t_star must be finite and >= 0");
  const SU2Generators g = su2_generators(p);
  const Eigen::Index dim = g.sx.rows();
  const Matrix before = p.field * g.sx;
  const Matrix after = p.field * g.sz;
  const OperatorState seed(Vector::Unit(dim, 0));
  const KrylovBasis basis = lanczos_basis([&](const Vector& v) -> Vector { return before * v; }, seed,
                                          static_cast<std::size_t>(dim));
  const KrylovBasis dual = dual_basis(basis, p);
  const double horizon = std::max(max_abs(grid), t_star);
  const LiouvillianSchedule schedule({{before, t_star}, {after, horizon - t_star}});
  const std::vector<OperatorState> states = propagate(schedule, seed, grid);

  std::vector<double> weights;
  double lambda = 1.0;
  if (deformation) {
    DeformationParams d = *deformation;
    d.ell = p.ell;
    weights = height_weights(d);
    lambda = d.lambda;
  }
  const EulerAngles south{};

  ComplexityTrace tr;
  tr.times.assign(grid.begin(), grid.end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const AmplitudeVector phi = project(states[i], basis, grid[i]);
    const AmplitudeVector phi_dual = project(states[i], dual, grid[i]);
    tr.ck.push_back(k_complexity(phi));
    tr.ck_prime.push_back(k_complexity(phi_dual));
    const EulerAngles a = angles_from_state({states[i].entries(), grid[i], 0.0}, p);
    tr.theta.push_back(a.theta);
    tr.psi.push_back(a.psi);
    tr.circuit.push_back(geodesic_length(south, a, lambda, p.ell));
    if (deformation) tr.ck_deformed.push_back(k_complexity(phi, weights));
  }
  return tr;
}

}  // namespace kcomplex
