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

#ifndef QZNAV_LINALG_HPP
#define QZNAV_LINALG_HPP

#include <Eigen/Dense>

#include "qznav/types.hpp"

/// @file linalg.hpp
/// Dense complex linear algebra for small Hermitian systems.
///
/// Everything here is a pure function of its inputs. The scale of interest
/// is a handful of dimensions (n <= 16 or so); no attempt is made at
/// sparse or large-n performance.

namespace qznav {

/// Result of diagonalising a Hermitian operator: h = V diag(lambda) V^dag
/// with eigenvalues sorted ascending and orthonormal eigenvector columns.
struct Eigendecomposition {
  Eigen::VectorXd eigenvalues;
  UnitaryOperator eigenvectors;
};

/// Diagonalises a Hermitian operator.
///
/// @param h operator to diagonalise.
/// @return eigenvalues in ascending order plus the unitary of column
///   eigenvectors; reconstruction residual is below 1e-10 max-abs.
Eigendecomposition hermitian_eigendecomposition(const HermitianOperator& h);

/// Unitary exponential U = e^{-i h t}.
///
/// Dimension 2 uses the closed-form Pauli expansion; larger dimensions go
/// through the eigendecomposition. expm_unitary(h, 0) is the identity.
UnitaryOperator expm_unitary(const HermitianOperator& h, double t);

/// Sesquilinear inner product <a|b>, conjugate-linear in the first slot.
Complex inner(const PureState& a, const PureState& b);

/// Hilbert-Schmidt pairing tr(a b), real for Hermitian arguments.
double hs_inner(const HermitianOperator& a, const HermitianOperator& b);

/// Expectation value <psi|h|psi>.
double expectation(const HermitianOperator& h, const PureState& psi);

/// Variance <h^2> - <h>^2, clamped to zero if rounding makes it negative.
double variance(const HermitianOperator& h, const PureState& psi);

/// Symmetrised covariance Re<psi|a b|psi> - <a><b>.
double covariance(const HermitianOperator& a, const HermitianOperator& b,
                  const PureState& psi);

/// |<a|b>|, clamped into [0, 1]. Invariant under global phase changes of
/// either argument.
double projective_fidelity(const PureState& a, const PureState& b);

/// Spectral norm (largest absolute eigenvalue) of a Hermitian operator.
double spectral_norm(const HermitianOperator& h);

/// Precomputed flow of a fixed Hamiltonian.
///
/// Caches the eigendecomposition of h once so that e^{-i h t} and its
/// action on vectors or conjugation of operators cost O(n^2) or O(n^3)
/// per query with no further diagonalisation. The workhorse for drift
/// evolution, where the same wind is exponentiated at thousands of times.
class HamiltonianFlow {
 public:
  explicit HamiltonianFlow(const HermitianOperator& h);

  Eigen::Index dim() const { return eigenvectors_.rows(); }

  /// e^{-i h t} as a dense matrix.
  Matrix flow(double t) const;

  /// e^{-i h t} v without forming the matrix.
  Vector apply(double t, const Vector& v) const;

  /// e^{-i h t} K e^{+i h t}.
  Matrix conjugate(double t, const Matrix& k) const;

  /// Largest absolute eigenvalue of h.
  double spectral_norm() const;

 private:
  /// Diagonal phase vector e^{-i lambda t}.
  Vector phases(double t) const;

  Eigen::VectorXd eigenvalues_;
  Matrix eigenvectors_;
};

namespace detail {

/// e^{-i h t} for a raw Hermitian matrix, skipping wrapper validation.
/// Hot-path kernel for the propagator; h must already be Hermitian.
Matrix expm_matrix(const Matrix& h, double t);

}  // namespace detail

}  // namespace qznav

#endif  // QZNAV_LINALG_HPP
