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

#include "qznav/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "qznav/errors.hpp"

namespace qznav {

namespace {

void check_same_dim(Eigen::Index a, Eigen::Index b, const char* what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionMismatchError(msg.str());
  }
}

}  // namespace

Eigendecomposition hermitian_eigendecomposition(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition failed to converge");
  }
  // SelfAdjointEigenSolver sorts ascending and returns orthonormal columns.
  return Eigendecomposition{solver.eigenvalues(),
                            UnitaryOperator(solver.eigenvectors())};
}

namespace detail {

Matrix expm_matrix(const Matrix& h, double t) {
  const Eigen::Index n = h.rows();
  if (n == 2) {
    // Pauli expansion: h = c0 I + x sx + y sy + z sz, so
    // e^{-i h t} = e^{-i c0 t} (cos(r t) I - i sin(r t) (h - c0 I)/r).
    const double c0 = 0.5 * (h(0, 0).real() + h(1, 1).real());
    const double z = h(0, 0).real() - c0;
    const double x = h(1, 0).real();
    const double y = h(1, 0).imag();
    const double r = std::sqrt(x * x + y * y + z * z);
    const Complex phase = std::polar(1.0, -c0 * t);
    Matrix u(2, 2);
    if (r < 1e-300) {
      u << phase, 0.0, 0.0, phase;
      return u;
    }
    const double c = std::cos(r * t);
    const double s = std::sin(r * t) / r;
    const Complex mi(0.0, -1.0);
    u(0, 0) = phase * (c + mi * s * z);
    u(1, 1) = phase * (c - mi * s * z);
    u(1, 0) = phase * mi * s * Complex(x, y);
    u(0, 1) = phase * mi * s * Complex(x, -y);
    return u;
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    throw Error("Hermitian eigendecomposition failed to converge");
  }
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Matrix& v = solver.eigenvectors();
  Vector phases(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    phases(k) = std::polar(1.0, -lambda(k) * t);
  }
  return v * phases.asDiagonal() * v.adjoint();
}

}  // namespace detail

UnitaryOperator expm_unitary(const HermitianOperator& h, double t) {
  return UnitaryOperator(detail::expm_matrix(h.matrix(), t));
}

Complex inner(const PureState& a, const PureState& b) {
  check_same_dim(a.dim(), b.dim(), "inner");
  return a.vector().dot(b.vector());
}

double hs_inner(const HermitianOperator& a, const HermitianOperator& b) {
  check_same_dim(a.dim(), b.dim(), "hs_inner");
  // tr(ab) = sum_ij a_ij conj(b_ij) for Hermitian b; O(n^2).
  return a.matrix().cwiseProduct(b.matrix().conjugate()).sum().real();
}

double expectation(const HermitianOperator& h, const PureState& psi) {
  check_same_dim(h.dim(), psi.dim(), "expectation");
  const Vector hpsi = h.matrix() * psi.vector();
  return psi.vector().dot(hpsi).real();
}

double variance(const HermitianOperator& h, const PureState& psi) {
  check_same_dim(h.dim(), psi.dim(), "variance");
  const Vector hpsi = h.matrix() * psi.vector();
  // <h^2> = ||h psi||^2 for Hermitian h.
  const double second = hpsi.squaredNorm();
  const double first = psi.vector().dot(hpsi).real();
  return std::max(0.0, second - first * first);
}

double covariance(const HermitianOperator& a, const HermitianOperator& b,
                  const PureState& psi) {
  check_same_dim(a.dim(), b.dim(), "covariance");
  check_same_dim(a.dim(), psi.dim(), "covariance");
  const Vector apsi = a.matrix() * psi.vector();
  const Vector bpsi = b.matrix() * psi.vector();
  const double cross = apsi.dot(bpsi).real();
  const double ea = psi.vector().dot(apsi).real();
  const double eb = psi.vector().dot(bpsi).real();
  return cross - ea * eb;
}

double projective_fidelity(const PureState& a, const PureState& b) {
  return std::min(1.0, std::abs(inner(a, b)));
}

double spectral_norm(const HermitianOperator& h) {
  const Eigendecomposition eig = hermitian_eigendecomposition(h);
  return eig.eigenvalues.cwiseAbs().maxCoeff();
}

HamiltonianFlow::HamiltonianFlow(const HermitianOperator& h) {
  const Eigendecomposition eig = hermitian_eigendecomposition(h);
  eigenvalues_ = eig.eigenvalues;
  eigenvectors_ = eig.eigenvectors.matrix();
}

Vector HamiltonianFlow::phases(double t) const {
  Vector p(eigenvalues_.size());
  for (Eigen::Index k = 0; k < eigenvalues_.size(); ++k) {
    p(k) = std::polar(1.0, -eigenvalues_(k) * t);
  }
  return p;
}

Matrix HamiltonianFlow::flow(double t) const {
  return eigenvectors_ * phases(t).asDiagonal() * eigenvectors_.adjoint();
}

Vector HamiltonianFlow::apply(double t, const Vector& v) const {
  check_same_dim(dim(), v.size(), "HamiltonianFlow::apply");
  return eigenvectors_ *
         (phases(t).cwiseProduct(eigenvectors_.adjoint() * v));
}

Matrix HamiltonianFlow::conjugate(double t, const Matrix& k) const {
  check_same_dim(dim(), k.rows(), "HamiltonianFlow::conjugate");
  const Vector p = phases(t);
  Matrix in_eigenbasis = eigenvectors_.adjoint() * k * eigenvectors_;
  // (P M P^dag)_ij = p_i m_ij conj(p_j) with unit-modulus phases p.
  in_eigenbasis = in_eigenbasis.cwiseProduct(p * p.adjoint());
  return eigenvectors_ * in_eigenbasis * eigenvectors_.adjoint();
}

double HamiltonianFlow::spectral_norm() const {
  return eigenvalues_.cwiseAbs().maxCoeff();
}

}  // namespace qznav
