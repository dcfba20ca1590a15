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


#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "fixtures/pinned_oracles.hpp"
#include "kcomplex/error.hpp"
#include "kcomplex/geometry.hpp"
#include "support/oracles.hpp"

using namespace kcomplex;
namespace kt = kcomplex::testing;
using std::numbers::pi;

namespace {

double height_oracle(double theta, double lambda, double ell) {
  auto f = [lambda](double x) { return std::sqrt(std::max(0.0, height_radicand(x, lambda))); };
  // Split at the pole-side kink region so Romberg sees smooth pieces.
  const double mid = theta / 2;
  return ell * (kt::romberg(f, 0.0, mid, 1e-14) + kt::romberg(f, mid, theta, 1e-14));
}

double golden_min(const std::function<double(double)>& f, double lo, double hi) {
  const double r = (std::sqrt(5.0) - 1) / 2;
  double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
  double fa = f(a), fb = f(b);
  while (hi - lo > 1e-13) {
    if (fa < fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - r * (hi - lo);
      fa = f(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + r * (hi - lo);
      fb = f(b);
    }
  }
  return (lo + hi) / 2;
}

double berger(double theta, double lambda) {
  const double c = std::cos(theta), s = std::sin(theta);
  return lambda * lambda * s * s / (1 + (lambda * lambda - 1) * c * c);
}

double central_angle(const EulerAngles& a, const EulerAngles& b) {
  const double c = std::cos(a.theta) * std::cos(b.theta) +
                   std::sin(a.theta) * std::sin(b.theta) * std::cos(a.psi - b.psi);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

TEST_CASE("full metric") {
  for (double theta : {0.0, 0.4, 1.3, 2.8}) {
    const Eigen::MatrixXd g = full_metric({theta, 0.2, -0.4}, 1.0, 2.0).components;
    Eigen::MatrixXd expected(3, 3);
    const double c = std::cos(theta);
    expected << 1, 0, 0, 0, 1, c, 0, c, 1;
    CHECK((g - 4.0 * expected).cwiseAbs().maxCoeff() <= 1e-15);
  }
  for (double lambda : {0.5, 1.1, 1.7}) {
    const Eigen::MatrixXd g = full_metric({pi / 2, 0, 0}, lambda, 3.0).components;
    CHECK(std::abs(g(1, 1) - 9.0 * lambda * lambda) <= 1e-13);
    CHECK(std::abs(g(2, 2) - 9.0) <= 1e-13);
    CHECK(std::abs(g(1, 2)) <= 1e-13);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = kt::uniform(0.05, std::sqrt(3.0));
    const double ell = kt::uniform(0.5, 8);
    const Eigen::MatrixXd g = full_metric({kt::uniform(0, pi), 0, 0}, lambda, ell).components;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    CHECK(eig.eigenvalues().minCoeff() >= -1e-12 * ell * ell);
  }
}

TEST_CASE("reduced metric") {
  for (double theta : {0.1, 0.9, 1.6, 3.0}) {
    const ReducedMetric r = reduce_metric(theta, 1.0, 1.5);
    CHECK(std::abs(r.slope + std::cos(theta)) <= 1e-15);
    CHECK(r.metric.components(0, 0) == 2.25);
    CHECK(std::abs(r.metric.components(1, 1) - 2.25 * std::pow(std::sin(theta), 2)) <= 1e-15);
    CHECK(r.metric.components(0, 1) == 0.0);
  }
  for (double lambda : {0.3, 1.0, 1.2}) {
    const ReducedMetric r = reduce_metric(pi / 2, lambda, 2.0);
    CHECK(std::abs(r.slope) <= 1e-15);
    CHECK(std::abs(r.metric.components(1, 1) - 4 * lambda * lambda) <= 1e-14);
  }
}

TEST_CASE("reduced slope minimizes the full metric") {
  for (int trial = 0; trial < 100; ++trial) {
    const double theta = kt::uniform(0.05, pi - 0.05);
    const double lambda = kt::uniform(0.3, 1.7);
    const double ell = kt::uniform(0.5, 4);
    const Eigen::MatrixXd g = full_metric({theta, 0, 0}, lambda, ell).components;
    auto ds2 = [&](double dphi) {
      Eigen::Vector3d v(0.0, 1.0, dphi);
      return v.dot(g * v);
    };
    const double best = golden_min(ds2, -10, 10);
    const ReducedMetric r = reduce_metric(theta, lambda, ell);
    CHECK(std::abs(best - r.slope) <= 1e-6);
    CHECK(std::abs(ds2(r.slope) - r.metric.components(1, 1)) <= 1e-12 * ell * ell);
    CHECK(ds2(r.slope) <= ds2(best) + 1e-8);
  }
}

TEST_CASE("validity domain of the height integrand") {
  // The radicand stays non-negative up to sqrt(3/2) and fails just above it.
  for (double lambda : {0.2, 0.7, 1.0, 1.1, 1.2, kMaxLambda}) {
    double worst = 1.0;
    for (int i = 0; i <= 20000; ++i) worst = std::min(worst, height_radicand(pi * i / 20000, lambda));
    CHECK(worst >= -1e-12);
  }
  for (double lambda : {kMaxLambda * 1.001, 1.3, std::sqrt(3.0), 1.8}) {
    double worst = 1.0;
    for (int i = 0; i <= 20000; ++i) worst = std::min(worst, height_radicand(pi * i / 20000, lambda));
    CHECK(worst < -1e-7);
  }
  double at_sqrt3 = 1.0;
  for (int i = 0; i <= 200000; ++i) at_sqrt3 = std::min(at_sqrt3, height_radicand(pi * i / 200000, std::sqrt(3.0)));
  CHECK(std::abs(at_sqrt3 + 1.0) <= 1e-9);
  CHECK(std::abs(kMaxLambda - std::sqrt(1.5)) <= 1e-16);
}

TEST_CASE("height at lambda 1 is l(1 - cos)") {
  for (double ell : {0.5, 1.0, 2.5, 8.0}) {
    for (int i = 0; i < 1000; i += 7) {
      const double theta = pi * i / 999;
      CHECK(std::abs(height(theta, {1.0, ell}) - ell * (1 - std::cos(theta))) <= 1e-10);
    }
  }
  CHECK(height(0.0, {1.1, 2.0}) == 0.0);
}

TEST_CASE("heights at strip centers are equally spaced at lambda 1") {
  for (int two_ell = 1; two_ell <= 16; ++two_ell) {
    const std::vector<double> w = height_weights({1.0, two_ell / 2.0});
    REQUIRE(w.size() == static_cast<std::size_t>(two_ell + 1));
    for (int n = 0; n <= two_ell; ++n) CHECK(std::abs(w[n] - n) <= 1e-9);
  }
  const std::vector<double> w = height_weights({1.0, 2.0});
  for (int n = 0; n < 5; ++n) CHECK(std::abs(w[n] - n) <= 1e-12);
}

TEST_CASE("height matches the Romberg oracle and the pinned value") {
  CHECK(std::abs(height(pi, {1.2, 1.0}) - pins::kHeightPiLambda1p2Ell1) <= 1e-10);
  CHECK(std::abs(height_oracle(pi, 1.2, 1.0) - pins::kHeightPiLambda1p2Ell1) <= 1e-10);
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = kt::uniform(0.1, kMaxLambda);
    const double ell = static_cast<int>(kt::uniform(1, 9)) / 2.0;
    const double theta = kt::uniform(0, pi);
    CHECK(std::abs(height(theta, {lambda, ell}) - height_oracle(theta, lambda, ell)) <= 1e-9);
  }
}

TEST_CASE("height weights at the pinned deformations") {
  const auto w09 = height_weights({0.9, 4.0});
  const auto w12 = height_weights({1.2, 4.0});
  for (std::size_t n = 0; n < 9; ++n) {
    CHECK(std::abs(w09[n] - pins::kHeightWeightsEll4Lambda0p9[n]) <= 1e-9);
    CHECK(std::abs(w12[n] - pins::kHeightWeightsEll4Lambda1p2[n]) <= 1e-9);
  }
}

TEST_CASE("height weights at the edge of the validity domain") {
  const auto w = height_weights({kMaxLambda, 1.0});
  REQUIRE(w.size() == 3);
  for (std::size_t n = 0; n < 3; ++n) {
    CHECK(std::abs(w[n] - height_oracle(strip_center({1.0, 1.0}, n), kMaxLambda, 1.0)) <= 1e-9);
  }
  CHECK(w[0] < w[1]);
  CHECK(w[1] < w[2]);
}

TEST_CASE("height weights increase strictly with n") {
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = kt::uniform(0.05, kMaxLambda);
    const double ell = static_cast<int>(kt::uniform(1, 17)) / 2.0;
    const auto w = height_weights({lambda, ell});
    for (std::size_t n = 1; n < w.size(); ++n) CHECK(w[n] > w[n - 1]);
  }
}

TEST_CASE("height is monotone in theta") {
  for (int trial = 0; trial < 100; ++trial) {
    const double lambda = kt::uniform(0.05, kMaxLambda);
    const double a = kt::uniform(0, pi);
    const double b = kt::uniform(0, pi);
    const double lo = std::min(a, b), hi = std::max(a, b);
    CHECK(height(lo, {lambda, 1.0}) <= height(hi, {lambda, 1.0}) + 1e-15);
  }
}

TEST_CASE("height domain errors") {
  for (double lambda : {1.8, 0.0, -1.0, std::sqrt(3.0), kMaxLambda * (1 + 1e-12), std::nan("")}) {
    try {
      (void)height(1.0, {lambda, 1.0});
      FAIL("lambda accepted: " << lambda);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DomainError);
    }
  }
  CHECK_THROWS_AS(height(-0.1, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(height(4.0, {1.0, 1.0}), Error);
  CHECK_THROWS_AS(height_weights({1.0, 0.7}), Error);
  CHECK_NOTHROW(height(pi, {kMaxLambda, 1.0}));
}

TEST_CASE("height agrees with the surface of revolution") {
  // dh = sqrt(l^2 dtheta^2 - dr^2) for the embedded profile r(theta).
  for (double lambda : {0.6, 0.9, 1.2}) {
    const double ell = 2.0;
    auto dh = [&](double x) {
      const double e = 1e-6;
      const double dr = (profile_radius(x + e, lambda, ell) - profile_radius(x - e, lambda, ell)) / (2 * e);
      return std::sqrt(std::max(0.0, ell * ell - dr * dr));
    };
    for (double theta : {0.3, 1.0, 1.9, 2.7}) {
      CHECK(std::abs(ell * std::sqrt(height_radicand(theta, lambda)) - dh(theta)) <= 1e-6);
    }
  }
}

TEST_CASE("height table interpolation") {
  for (double lambda : {0.9, 1.0, 1.2, kMaxLambda}) {
    const DeformationParams d{lambda, 4.0};
    const HeightTable table(d);
    CHECK(table.thetas().size() == 2048);
    CHECK(table(0.0) == 0.0);
    CHECK(std::abs(table(pi) - height(pi, d)) <= 1e-10);
    double prev = -1.0;
    for (int i = 0; i <= 5000; ++i) {
      const double v = table(pi * i / 5000);
      CHECK(v >= prev);
      prev = v;
    }
    for (int trial = 0; trial < 100; ++trial) {
      const double theta = kt::uniform(0, pi);
      CHECK(std::abs(table(theta) - height(theta, d)) <= 1e-7);
    }
  }
  CHECK_THROWS_AS(HeightTable({1.8, 1.0}), Error);
  CHECK_THROWS_AS(HeightTable({1.0, 1.0}, 2), Error);
}

TEST_CASE("round-sphere geodesics") {
  CHECK(std::abs(geodesic_length({0, 0, 0}, {pi, 0, 0}, 1.0, 1.0) - pi) <= 1e-15);
  CHECK(std::abs(geodesic_length({pi / 2, 0, 0}, {pi / 2, pi, 0}, 1.0, 1.0) - pi) <= 1e-15);
  for (double theta : {0.0, 0.5, 1.5, 3.0}) {
    CHECK(std::abs(geodesic_length({0, 0, 0}, {theta, 1.2, 0}, 1.0, 2.5) - 2.5 * theta) <= 1e-14);
  }
}

TEST_CASE("shooting reduces to the great circle at lambda 1") {
  int done = 0;
  while (done < 50) {
    const EulerAngles a{kt::uniform(0.05, pi - 0.05), kt::uniform(-pi, pi), 0};
    const EulerAngles b{kt::uniform(0.05, pi - 0.05), kt::uniform(-pi, pi), 0};
    if (central_angle(a, b) > pi - 0.2 || central_angle(a, b) < 1e-3) continue;
    const double ell = kt::uniform(0.5, 4);
    const GeodesicSolution s = geodesic_shooting(a, b, 1.0, ell);
    CHECK(std::abs(s.length - ell * central_angle(a, b)) <= 1e-6);
    CHECK(s.speed_drift <= 1e-8);
    ++done;
  }
}

TEST_CASE("continued shooting is consistent near lambda 1") {
  // Starting the same pair from a perturbed lambda and coming back must agree
  // with the closed form.
  const EulerAngles a{0.7, -0.4, 0};
  const EulerAngles b{2.1, 1.3, 0};
  const double round = central_angle(a, b);
  const double near = geodesic_length(a, b, 1.0 + 1e-9, 1.0);
  CHECK(std::abs(near - round) <= 1e-6);
}

TEST_CASE("pole endpoints use the meridian") {
  for (double lambda : {0.5, 1.1, 1.2}) {
    CHECK(std::abs(geodesic_length({0, 0, 0}, {pi / 2, 0.4, 0}, lambda, 2.0) - pi) <= 1e-14);
    CHECK(std::abs(geodesic_length({1.0, 0.3, 0}, {pi, 0, 0}, lambda, 1.0) - (pi - 1.0)) <= 1e-14);
  }
}

TEST_CASE("south pole to the equator at lambda 1.1 against a graph oracle") {
  const double lambda = 1.1;
  const double shooting = geodesic_length({0, 0, 0}, {pi / 2, 0, 0}, lambda, 1.0);
  const double graph = kt::dijkstra_metric_distance([&](double t) { return berger(t, lambda); }, 0.0, 0.0,
                                                    pi / 2, 0.0, 181, 61, -0.6, 0.6, 3);
  CHECK(std::abs(shooting - graph) <= 1e-3 * graph);
}

TEST_CASE("Berger geodesics against a graph oracle") {
  struct Case {
    EulerAngles a, b;
    double lambda;
  };
  const std::vector<Case> cases = {
      {{1.0, 0.0, 0}, {2.0, 1.2, 0}, 1.1},
      {{0.6, 0.0, 0}, {1.4, 1.0, 0}, 0.8},
      {{1.2, 0.0, 0}, {1.9, 0.9, 0}, 1.2},
  };
  for (const Case& c : cases) {
    const GeodesicSolution s = geodesic_shooting(c.a, c.b, c.lambda, 1.0);
    const double graph = kt::dijkstra_metric_distance([&](double t) { return berger(t, c.lambda); }, c.a.theta,
                                                      c.a.psi, c.b.theta, c.b.psi, 721, 201, -0.5, 1.5, 5);
    CHECK(std::abs(s.length - graph) <= 1e-3 * graph);
    CHECK(s.speed_drift <= 1e-8);
  }
}

TEST_CASE("Berger geodesics obey the triangle inequality and symmetry") {
  for (int trial = 0; trial < 30; ++trial) {
    const double lambda = kt::uniform(0.7, 1.2);
    const EulerAngles a{kt::uniform(0.3, 1.3), kt::uniform(-0.5, 0.5), 0};
    const EulerAngles b{kt::uniform(0.9, 2.2), kt::uniform(-0.5, 0.5), 0};
    const EulerAngles c{kt::uniform(1.6, 2.8), kt::uniform(-0.5, 0.5), 0};
    const double ab = geodesic_length(a, b, lambda, 1.0);
    const double ba = geodesic_length(b, a, lambda, 1.0);
    const double bc = geodesic_length(b, c, lambda, 1.0);
    const double ac = geodesic_length(a, c, lambda, 1.0);
    CHECK(std::abs(ab - ba) <= 1e-8);
    CHECK(ac <= ab + bc + 1e-8);
  }
}

TEST_CASE("hyperbolic height") {
  CHECK(hyperbolic_height(0.0, 2.0) == 0.0);
  CHECK(std::abs(hyperbolic_height(2.0, 0.5) - (std::cosh(2.0) - 1) / 2) <= 1e-15);
  CHECK_THROWS_AS(hyperbolic_height(-1.0, 1.0), Error);
}
