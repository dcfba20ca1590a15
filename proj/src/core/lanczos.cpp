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
#include "kcomplex/lanczos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "kcomplex/error.hpp"
#include "log.hpp"

namespace kcomplex {

namespace {

constexpr double kOrthonormalityTolerance = 1e-10;
constexpr double kActionHermiticityTolerance = 1e-10;

Vector random_unit(Eigen::Index n, std::mt19937_64& gen) {
  std::normal_distribution<double> dist;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Complex(dist(gen), dist(gen));
  return v / v.norm();
}

}  // namespace

KrylovBasis::KrylovBasis(Matrix states, std::vector<double> hops, std::vector<double> diagonals)
    : states_(std::move(states)), hops_(std::move(hops)), diagonals_(std::move(diagonals)) {
  const auto d = dim();
  require(d >= 1, "Krylov basis must contain at least one state");
  require(hops_.size() == d - 1, "Krylov basis needs exactly D-1 hops");
  require(diagonals_.size() == d, "Krylov basis needs exactly D diagonal entries");
  const Matrix gram = states_.adjoint() * states_;
  const double defect = (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
  require(defect <= kOrthonormalityTolerance,
          "Krylov basis states are not orthonormal (defect " + std::to_string(defect) + ")");
}

OperatorState KrylovBasis::state(std::size_t n) const {
  require(n < dim(), "Krylov index out of range");
  return OperatorState(states_.col(static_cast<Eigen::Index>(n)));
}

double hermiticity_defect(const StateMap& action, Eigen::Index size, unsigned trials) {
  std::mt19937_64 gen(0x4b72796c6f76ULL);
  double worst = 0.0;
  for (unsigned i = 0; i < trials; ++i) {
    const Vector x = random_unit(size, gen);
    const Vector y = random_unit(size, gen);
    const Vector lx = action(x);
    const Vector ly = action(y);
    require(lx.size() == size && ly.size() == size, "linear map changes the state dimension");
    const double scale = std::max({lx.norm(), ly.norm(), 1e-300});
    worst = std::max(worst, std::abs(x.dot(ly) - lx.dot(y)) / scale);
  }
  return worst;
}

KrylovBasis lanczos_basis(const StateMap& action, const OperatorState& seed, std::size_t max_dim,
                          double term_tol) {
  require(seed.is_normalized(), "Lanczos seed must be normalized");
  require(max_dim >= 1, "max_dim must be at least 1");
  require(term_tol >= 0.0, "termination tolerance must be non-negative");
  const Eigen::Index n = seed.size();
  const double defect = hermiticity_defect(action, n);
  require(defect <= kActionHermiticityTolerance,
          "Liouvillian action is not Hermitian (relative defect " + std::to_string(defect) + ")");

  const auto cap = static_cast<Eigen::Index>(std::min<std::size_t>(max_dim, static_cast<std::size_t>(n)));
  Matrix q(n, cap);
  q.col(0) = seed.entries();
  std::vector<double> hops;
  std::vector<double> diagonals;
  double scale = 0.0;

  for (Eigen::Index j = 0;; ++j) {
    Vector w = action(q.col(j));
    if (j == 0) scale = w.norm();
    const double alpha = q.col(j).dot(w).real();
    diagonals.push_back(alpha);
    w -= alpha * q.col(j);
    if (j > 0) w -= hops.back() * q.col(j - 1);
    for (int pass = 0; pass < 2; ++pass) {
      const auto prior = q.leftCols(j + 1);
      w -= prior * (prior.adjoint() * w);
    }
    const double beta = w.norm();
    if (j + 1 == cap) break;
    if (beta <= term_tol * scale) {
      detail::logger().debug("lanczos terminated at D={} (beta={:.3e})", j + 1, beta);
      break;
    }
    scale = std::max(scale, beta);
    hops.push_back(beta);
    q.col(j + 1) = w / beta;
  }
  const auto d = static_cast<Eigen::Index>(diagonals.size());
  return KrylovBasis(q.leftCols(d), std::move(hops), std::move(diagonals));
}

LiouvillianMatrix krylov_operator(const KrylovBasis& basis) {
  const auto d = static_cast<Eigen::Index>(basis.dim());
  Eigen::VectorXcd index(d);
  for (Eigen::Index i = 0; i < d; ++i) index(i) = static_cast<double>(i);
  const Matrix& q = basis.states();
  return LiouvillianMatrix(q * index.asDiagonal() * q.adjoint());
}

AmplitudeVector project(const OperatorState& state, const KrylovBasis& basis, double time) {
  require(state.size() == basis.ambient_size(),
          "state dimension " + std::to_string(state.size()) + " does not match basis ambient dimension " +
              std::to_string(basis.ambient_size()));
  AmplitudeVector out;
  out.phi = basis.states().adjoint() * state.entries();
  out.time = time;
  out.leaked_weight = state.entries().squaredNorm() - out.phi.squaredNorm();
  return out;
}

}  // namespace kcomplex
