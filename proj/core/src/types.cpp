// Copyright 2026 The QZNav Authors
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

#include "qznav/types.hpp"

#include <cmath>
#include <sstream>

#include "qznav/errors.hpp"

namespace qznav {

LinalgTolerances& linalg_tolerances() {
  static LinalgTolerances tolerances;
  return tolerances;
}

namespace {

void check_square(const Matrix& a, const char* kind) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    std::ostringstream msg;
    msg << kind << " must be square and nonempty, got " << a.rows() << "x"
        << a.cols();
    throw DimensionMismatchError(msg.str());
  }
}

}  // namespace

HermitianOperator::HermitianOperator(const Matrix& a) {
  check_square(a, "Hermitian operator");
  const double residual = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (!(residual <= linalg_tolerances().hermiticity)) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian: max |A - A^dag| = " << residual;
    throw InvariantViolationError(msg.str(), residual);
  }
  mat_ = ((a + a.adjoint()) / 2.0).eval();
}

HermitianOperator HermitianOperator::zero(Eigen::Index dim) {
  return HermitianOperator(Matrix::Zero(dim, dim));
}

UnitaryOperator::UnitaryOperator(const Matrix& u) {
  check_square(u, "Unitary operator");
  const Matrix gram = u.adjoint() * u;
  const double residual =
      (gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
  if (!(residual <= linalg_tolerances().unitarity)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: max |U^dag U - I| = " << residual;
    throw InvariantViolationError(msg.str(), residual);
  }
  mat_ = u;
}

UnitaryOperator UnitaryOperator::identity(Eigen::Index dim) {
  return UnitaryOperator(Matrix::Identity(dim, dim));
}

PureState::PureState(const Vector& psi) {
  if (psi.size() == 0) {
    throw DimensionMismatchError("state vector must be nonempty");
  }
  const double norm_sq = psi.squaredNorm();
  const double residual = std::abs(norm_sq - 1.0);
  if (!(residual <= linalg_tolerances().state_norm)) {
    std::ostringstream msg;
    msg << "state is not normalised: | ||psi||^2 - 1 | = " << residual;
    throw InvariantViolationError(msg.str(), residual);
  }
  vec_ = psi / std::sqrt(norm_sq);
}

PureState PureState::normalized(const Vector& psi) {
  if (psi.size() == 0) {
    throw DimensionMismatchError("state vector must be nonempty");
  }
  const double norm = psi.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw InvariantViolationError("cannot normalise a zero or non-finite vector",
                                  norm);
  }
  return PureState(psi / norm, true);
}

}  // namespace qznav
