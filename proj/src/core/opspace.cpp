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
#include "kcomplex/opspace.hpp"

#include <cmath>
#include <string>

#include "kcomplex/error.hpp"

namespace kcomplex {

namespace {

bool all_finite(const Eigen::Ref<const Matrix>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
    }
  }
  return true;
}

Eigen::Index side_of(Eigen::Index dim2) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(dim2))));
  require(d >= 1 && d * d == dim2,
          "state length " + std::to_string(dim2) + " is not a perfect square");
  return d;
}

}  // namespace

double hermitian_defect(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

OperatorMatrix::OperatorMatrix(Matrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() >= 1, "operator dimension must be at least 1");
  require(entries_.rows() == entries_.cols(),
          "operator must be square, got " + std::to_string(entries_.rows()) + "x" +
              std::to_string(entries_.cols()));
  require(all_finite(entries_), "operator has non-finite entries");
}

OperatorMatrix OperatorMatrix::hamiltonian(Matrix entries) {
  OperatorMatrix out(std::move(entries));
  const double defect = hermitian_defect(out.entries_);
  require(defect <= kHermitianTolerance,
          "Hamiltonian is not Hermitian (max |H - H^dagger| = " + std::to_string(defect) + ")");
  out.hamiltonian_ = true;
  return out;
}

OperatorState::OperatorState(Vector entries) : entries_(std::move(entries)) {
  require(entries_.size() >= 1, "operator state must be non-empty");
  require(all_finite(entries_), "operator state has non-finite entries");
  normalized_ = std::abs(entries_.squaredNorm() - 1.0) <= kNormalizationTolerance;
}

OperatorState OperatorState::normalized(const Vector& v) {
  const double n = v.norm();
  require(n > 0.0 && std::isfinite(n), "cannot normalize a zero or non-finite state");
  return OperatorState(v / n);
}

LiouvillianMatrix::LiouvillianMatrix(Matrix entries) : entries_(std::move(entries)) {
  require(entries_.rows() >= 1 && entries_.rows() == entries_.cols(),
          "superoperator must be square and non-empty");
}

OperatorState LiouvillianMatrix::apply(const OperatorState& state) const {
  require(state.size() == size(), "superoperator/state dimension mismatch");
  return OperatorState(entries_ * state.entries());
}

StateMap LiouvillianMatrix::as_map() const {
  return [m = entries_](const Vector& v) -> Vector { return m * v; };
}

OperatorState vectorize(const OperatorMatrix& a) {
  const Eigen::Index d = a.dim();
  Vector v(d * d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) v(m * d + n) = a.entries()(m, n);
  }
  return OperatorState(std::move(v));
}

OperatorMatrix unvectorize(const OperatorState& state) {
  const Eigen::Index d = side_of(state.size());
  Matrix a(d, d);
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index n = 0; n < d; ++n) a(m, n) = state.entries()(m * d + n);
  }
  return OperatorMatrix(std::move(a));
}

Complex inner(const OperatorState& a, const OperatorState& b) {
  require(a.size() == b.size(), "inner product dimension mismatch: " + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()));
  return a.entries().dot(b.entries());
}

OperatorMatrix commutator(const OperatorMatrix& h, const OperatorMatrix& o) {
  require(h.dim() == o.dim(), "commutator dimension mismatch");
  return OperatorMatrix(h.entries() * o.entries() - o.entries() * h.entries());
}

LiouvillianMatrix build_liouvillian(const OperatorMatrix& h) {
  const double defect = hermitian_defect(h.entries());
  require(defect <= kHermitianTolerance,
          "Liouvillian requires Hermitian H (max |H - H^dagger| = " + std::to_string(defect) + ")");
  const Eigen::Index d = h.dim();
  const Matrix id = Matrix::Identity(d, d);
  const Matrix& hm = h.entries();
  const Matrix ht = hm.transpose();
  Matrix l(d * d, d * d);
  // (A (x) B)_{(m,n),(k,q)} = A_{mk} B_{nq}.
  for (Eigen::Index m = 0; m < d; ++m) {
    for (Eigen::Index k = 0; k < d; ++k) {
      l.block(m * d, k * d, d, d) = hm(m, k) * id - (m == k ? ht : Matrix::Zero(d, d));
    }
  }
  return LiouvillianMatrix(std::move(l));
}

StateMap commutator_map(const OperatorMatrix& h) {
  require(hermitian_defect(h.entries()) <= kHermitianTolerance,
          "commutator map requires Hermitian H");
  return [hm = h.entries()](const Vector& v) -> Vector {
    const Eigen::Index d = hm.rows();
    require(v.size() == d * d, "commutator map dimension mismatch");
    // Row-major vec of O is the column-major vec of O^T.
    Eigen::Map<const Matrix> ot(v.data(), d, d);
    const Matrix o = ot.transpose();
    const Matrix c = hm * o - o * hm;
    const Matrix ct = c.transpose();
    return Eigen::Map<const Vector>(ct.data(), d * d);
  };
}

}  // namespace kcomplex
