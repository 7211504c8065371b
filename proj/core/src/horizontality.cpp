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

#include "qznav/horizontality.hpp"

#include <cmath>
#include <sstream>

#include "qznav/errors.hpp"
#include "qznav/linalg.hpp"

namespace qznav {

UnitaryOperator completion_unitary(const PureState& psi) {
  const Eigen::Index n = psi.dim();
  const Vector& v = psi.vector();
  // Householder reflector through u = psi + phi e1 maps e1 to -conj(phi) psi;
  // the -phi prefactor turns that into exactly psi in the first column.
  Complex phi(1.0, 0.0);
  if (std::abs(v(0)) > 1e-300) {
    phi = v(0) / std::abs(v(0));
  }
  Vector u = v;
  u(0) += phi;
  const double usq = u.squaredNorm();
  Matrix q = Matrix::Identity(n, n) - (2.0 / usq) * (u * u.adjoint());
  q *= -phi;
  return UnitaryOperator(q);
}

std::vector<HermitianOperator> stabilizer_basis(const PureState& psi) {
  const Eigen::Index n = psi.dim();
  const Matrix q = completion_unitary(psi).matrix();
  std::vector<HermitianOperator> basis;
  basis.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
  // In the rotated frame the stabiliser is every traceless Hermitian
  // matrix that is block diagonal with respect to the first coordinate.
  // Off-diagonal generators within the lower block:
  for (Eigen::Index j = 1; j < n; ++j) {
    for (Eigen::Index k = j + 1; k < n; ++k) {
      Matrix gx = Matrix::Zero(n, n);
      gx(j, k) = Complex(1.0 / std::sqrt(2.0), 0.0);
      gx(k, j) = Complex(1.0 / std::sqrt(2.0), 0.0);
      basis.emplace_back(HermitianOperator(q * gx * q.adjoint()));
      Matrix gy = Matrix::Zero(n, n);
      gy(j, k) = Complex(0.0, -1.0 / std::sqrt(2.0));
      gy(k, j) = Complex(0.0, 1.0 / std::sqrt(2.0));
      basis.emplace_back(HermitianOperator(q * gy * q.adjoint()));
    }
  }
  // Diagonal traceless generators (generalised Gell-Mann ladder); every
  // diagonal matrix fixes the rotated ray e1.
  for (Eigen::Index k = 1; k < n; ++k) {
    Matrix g = Matrix::Zero(n, n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (Eigen::Index j = 0; j < k; ++j) {
      g(j, j) = Complex(scale, 0.0);
    }
    g(k, k) = Complex(-static_cast<double>(k) * scale, 0.0);
    basis.emplace_back(HermitianOperator(q * g * q.adjoint()));
  }
  return basis;
}

VerticalHorizontalSplit split(const HermitianOperator& h,
                              const PureState& psi) {
  return split(h, psi, completion_unitary(psi));
}

VerticalHorizontalSplit split(const HermitianOperator& h,
                              const PureState& psi,
                              const UnitaryOperator& completion) {
  const Eigen::Index n = h.dim();
  if (psi.dim() != n || completion.dim() != n) {
    throw DimensionMismatchError("split: operands have different dimensions");
  }
  const Matrix& q = completion.matrix();
  const double frame_residual =
      (q.col(0) * (q.col(0).adjoint() * psi.vector()) - psi.vector()).norm();
  if (frame_residual > 1e-8) {
    throw InvariantViolationError(
        "split: completion's first column is not the given ray",
        frame_residual);
  }
  const Matrix rotated = q.adjoint() * h.matrix() * q;
  // Horizontal part: first column below the diagonal and its mirror.
  Matrix hor = Matrix::Zero(n, n);
  double z_norm_sq = 0.0;
  for (Eigen::Index k = 1; k < n; ++k) {
    hor(k, 0) = rotated(k, 0);
    hor(0, k) = std::conj(rotated(k, 0));
    z_norm_sq += std::norm(rotated(k, 0));
  }
  const Matrix vert = rotated - hor;
  return VerticalHorizontalSplit{
      HermitianOperator(q * vert * q.adjoint()),
      HermitianOperator(q * hor * q.adjoint()), z_norm_sq};
}

double vertical_residual(const HermitianOperator& h, const PureState& psi) {
  const VerticalHorizontalSplit parts = split(h, psi);
  const Eigen::Index n = h.dim();
  const Complex mean_trace =
      parts.vertical.matrix().trace() / static_cast<double>(n);
  // The identity component moves nothing; only the traceless remainder of
  // the vertical part measures non-horizontality.
  return (parts.vertical.matrix() -
          mean_trace * Matrix::Identity(n, n))
      .norm();
}

double stabilizer_residual(const HermitianOperator& h, const PureState& psi) {
  double worst = 0.0;
  for (const HermitianOperator& g : stabilizer_basis(psi)) {
    worst = std::max(worst, std::abs(hs_inner(h, g)));
  }
  return worst;
}

bool is_horizontal(const HermitianOperator& h, const PureState& psi,
                   double tol) {
  return stabilizer_residual(h, psi) < tol;
}

double aa_speed_sq(const HermitianOperator& h, const PureState& psi) {
  return 4.0 * variance(h, psi);
}

double speed_limit_gap(const HermitianOperator& h, const PureState& psi) {
  const double trace = std::abs(h.matrix().trace());
  if (trace > 1e-10) {
    std::ostringstream msg;
    msg << "speed_limit_gap requires a traceless operator, |tr h| = "
        << trace;
    throw InvariantViolationError(msg.str(), trace);
  }
  return 2.0 * hs_inner(h, h) - aa_speed_sq(h, psi);
}

}  // namespace qznav
