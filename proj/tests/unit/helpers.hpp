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

#ifndef QZNAV_TESTS_UNIT_HELPERS_HPP
#define QZNAV_TESTS_UNIT_HELPERS_HPP

#include <cmath>
#include <random>

#include "qznav/linalg.hpp"
#include "qznav/types.hpp"

// Shared instance generators for the property tests. Everything is seeded
// explicitly per test so failures replay deterministically.

namespace qznav_test {

using qznav::Complex;
using qznav::HermitianOperator;
using qznav::Matrix;
using qznav::PureState;
using qznav::Vector;

constexpr double kPi = 3.14159265358979323846;

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0);
  return m;
}

inline Matrix pauli_y() {
  Matrix m(2, 2);
  m << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  return m;
}

inline Matrix pauli_z() {
  Matrix m(2, 2);
  m << Complex(1, 0), Complex(0, 0), Complex(0, 0), Complex(-1, 0);
  return m;
}

inline HermitianOperator sigma_x() { return HermitianOperator(pauli_x()); }
inline HermitianOperator sigma_y() { return HermitianOperator(pauli_y()); }
inline HermitianOperator sigma_z() { return HermitianOperator(pauli_z()); }

inline PureState state2(Complex a, Complex b) {
  Vector v(2);
  v << a, b;
  return PureState::normalized(v);
}

inline double gauss(std::mt19937_64& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  return dist(rng);
}

inline Vector random_vector(Eigen::Index dim, std::mt19937_64& rng) {
  Vector v(dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    v(k) = Complex(gauss(rng), gauss(rng));
  }
  return v;
}

inline PureState random_state(Eigen::Index dim, std::mt19937_64& rng) {
  for (;;) {
    const Vector v = random_vector(dim, rng);
    if (v.norm() > 1e-6) {
      return PureState::normalized(v);
    }
  }
}

inline HermitianOperator random_hermitian(Eigen::Index dim,
                                          std::mt19937_64& rng) {
  Matrix a(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      a(r, c) = Complex(gauss(rng), gauss(rng));
    }
  }
  return HermitianOperator(((a + a.adjoint()) / 2.0).eval());
}

inline HermitianOperator random_traceless_hermitian(Eigen::Index dim,
                                                    std::mt19937_64& rng) {
  Matrix h = random_hermitian(dim, rng).matrix();
  h -= (h.trace() / static_cast<double>(dim)) * Matrix::Identity(dim, dim);
  return HermitianOperator(h);
}

// A drift with spectral norm drawn uniformly from (0, max_norm]. Drawing
// the norm separately from the direction keeps weak winds in the ensemble
// even at high dimension, where raw Gaussian matrices all have norm O(1).
inline HermitianOperator random_drift(Eigen::Index dim, std::mt19937_64& rng,
                                      double max_norm) {
  for (;;) {
    const HermitianOperator h = random_hermitian(dim, rng);
    const double norm = qznav::spectral_norm(h);
    if (norm < 1e-9) {
      continue;
    }
    std::uniform_real_distribution<double> uniform(0.0, max_norm);
    const double target = uniform(rng);
    return HermitianOperator(Matrix((target / norm) * h.matrix()));
  }
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return max_abs(Matrix(a - b));
}

}  // namespace qznav_test

#endif  // QZNAV_TESTS_UNIT_HELPERS_HPP
