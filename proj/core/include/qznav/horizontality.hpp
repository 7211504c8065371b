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

#ifndef QZNAV_HORIZONTALITY_HPP
#define QZNAV_HORIZONTALITY_HPP

#include <vector>

#include "qznav/types.hpp"

/// @file horizontality.hpp
/// Vertical/horizontal geometry of Hamiltonians relative to a ray.
///
/// Fix a state psi and rotate it to the first basis vector. A Hamiltonian
/// then splits into a block-diagonal part (vertical: generates motion of
/// the phase and of the orthogonal complement, leaving the ray fixed) and
/// a first-row/first-column part (horizontal: all of it moves the ray).
/// The horizontal subspace has 2(n-1) real dimensions for dimension n,
/// is spanned by the matrices with first column z below the diagonal, and
/// carries the whole evolution speed: 4 Var(H) = 4 |z|^2. That identity
/// gives the universal speed limit 4 Var(H) <= 2 tr(H^2) for traceless H,
/// with equality exactly on horizontal Hamiltonians.

namespace qznav {

/// Decomposition of a Hamiltonian at a ray. vertical + horizontal
/// reconstructs the input; the two parts are Hilbert-Schmidt orthogonal;
/// z_norm_sq is the squared norm of the horizontal coupling vector, so
/// 4 * z_norm_sq is the squared evolution speed at psi.
struct VerticalHorizontalSplit {
  HermitianOperator vertical;
  HermitianOperator horizontal;
  double z_norm_sq;
};

/// A unitary whose first column is psi (Householder completion).
UnitaryOperator completion_unitary(const PureState& psi);

/// Orthonormal Hermitian generators of the ray stabiliser at psi:
/// (n-1)^2 traceless operators g with g psi proportional to psi, pairwise
/// orthonormal under the Hilbert-Schmidt pairing.
std::vector<HermitianOperator> stabilizer_basis(const PureState& psi);

/// Splits h into vertical and horizontal parts at psi.
VerticalHorizontalSplit split(const HermitianOperator& h,
                              const PureState& psi);

/// Same split through a caller-supplied frame; the result is independent
/// of the completion choice. completion's first column must be psi up to
/// phase.
VerticalHorizontalSplit split(const HermitianOperator& h,
                              const PureState& psi,
                              const UnitaryOperator& completion);

/// Hilbert-Schmidt norm of the traceless vertical part of h at psi. Zero
/// exactly for horizontal h (plus any multiple of the identity, which
/// moves nothing).
double vertical_residual(const HermitianOperator& h, const PureState& psi);

/// Largest |tr(h g)| over the stabiliser generators g at psi.
double stabilizer_residual(const HermitianOperator& h, const PureState& psi);

/// True when h is orthogonal to every stabiliser generator at psi within
/// tol. The traceless-vertical-norm test is equivalent (the squared norm
/// is the sum of the squared stabiliser pairings) and agrees with this
/// one away from the tolerance boundary.
bool is_horizontal(const HermitianOperator& h, const PureState& psi,
                   double tol);

/// Squared evolution speed 4 Var(h) at psi (Anandan-Aharonov).
double aa_speed_sq(const HermitianOperator& h, const PureState& psi);

/// Slack 2 tr(h^2) - 4 Var(h) of the universal speed limit; nonnegative,
/// zero exactly when h is horizontal at psi. h must be traceless.
double speed_limit_gap(const HermitianOperator& h, const PureState& psi);

}  // namespace qznav

#endif  // QZNAV_HORIZONTALITY_HPP
