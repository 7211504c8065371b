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

#ifndef QZNAV_TYPES_HPP
#define QZNAV_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace qznav {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Validation tolerances for the strong wrapper types. Absolute
/// Frobenius-norm (operators) and Euclidean-norm (states) bounds.
struct LinalgTolerances {
  double hermiticity = 1e-12;
  double unitarity = 1e-10;
  double state_norm = 1e-12;
};

/// Process-wide tolerances used by the wrapper constructors. Mutable so a
/// front end can relax them for externally produced data.
LinalgTolerances& linalg_tolerances();

/// A Hermitian operator on C^n. Construction rejects matrices whose
/// anti-Hermitian part exceeds the hermiticity tolerance and stores the
/// symmetrised matrix, so downstream code never sees roundoff drift.
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& a);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  /// Frobenius norm of the stored matrix.
  double frobenius_norm() const { return mat_.norm(); }

  static HermitianOperator zero(Eigen::Index dim);

 private:
  Matrix mat_;
};

/// A unitary operator on C^n. Construction rejects matrices with
/// ||U^dag U - I|| above the unitarity tolerance.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(const Matrix& u);

  const Matrix& matrix() const { return mat_; }
  Eigen::Index dim() const { return mat_.rows(); }

  static UnitaryOperator identity(Eigen::Index dim);

 private:
  Matrix mat_;
};

/// A pure state in C^n, stored with unit norm. Construction rejects
/// vectors whose norm deviates from one beyond the state tolerance, then
/// renormalises exactly.
class PureState {
 public:
  explicit PureState(const Vector& psi);

  /// Normalises an arbitrary nonzero vector (no tolerance check).
  static PureState normalized(const Vector& psi);

  const Vector& vector() const { return vec_; }
  Eigen::Index dim() const { return vec_.size(); }

 private:
  explicit PureState(Vector psi, bool /*already_normalized*/) noexcept
      : vec_(std::move(psi)) {}
  Vector vec_;
};

}  // namespace qznav

#endif  // QZNAV_TYPES_HPP
