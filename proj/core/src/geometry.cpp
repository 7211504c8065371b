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

#include "qznav/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qznav/errors.hpp"
#include "qznav/linalg.hpp"

namespace qznav {

namespace {

// Below this squared displacement the direction is numerically zero and
// homogeneity forces F = 0.
constexpr double kZeroDisplacementSq = 1e-300;

// Width of the Kropina switch around |w|^2 = 1.
constexpr double kKropinaWindow = 1e-9;

}  // namespace

TangentData::TangentData(double wind_norm_sq_in, double xi_norm_sq_in,
                         double wind_dot_xi_in)
    : wind_norm_sq(wind_norm_sq_in),
      xi_norm_sq(xi_norm_sq_in),
      wind_dot_xi(wind_dot_xi_in) {
  if (!(wind_norm_sq >= 0.0) || !(xi_norm_sq >= 0.0) ||
      !std::isfinite(wind_dot_xi)) {
    throw InvariantViolationError(
        "tangent data requires finite entries with nonnegative norms",
        wind_norm_sq);
  }
  const double cs_slack =
      wind_dot_xi * wind_dot_xi - wind_norm_sq * xi_norm_sq;
  if (cs_slack > 1e-12) {
    std::ostringstream msg;
    msg << "tangent data violates Cauchy-Schwarz: <w,xi>^2 - |w|^2|xi|^2 = "
        << cs_slack;
    throw InvariantViolationError(msg.str(), cs_slack);
  }
}

double randers_time(const TangentData& td) {
  const double a = td.wind_norm_sq;
  const double q = td.xi_norm_sq;
  const double c = td.wind_dot_xi;
  if (q <= kZeroDisplacementSq) {
    return 0.0;
  }
  if (std::abs(1.0 - a) < kKropinaWindow) {
    // Kropina limit: the quadratic degenerates to 2cF = q.
    if (c <= 0.0) {
      throw UnreachableDirectionError(
          "unit-speed wind: only strictly downwind directions are reachable");
    }
    return q / (2.0 * c);
  }
  if (a < 1.0) {
    // F solves (1-a)F^2 + 2cF - q = 0; the unique positive root. The
    // rationalised form avoids cancellation when c >= 0.
    const double disc = c * c + q * (1.0 - a);
    const double root = std::sqrt(disc);
    if (c >= 0.0) {
      return q / (c + root);
    }
    return (root - c) / (1.0 - a);
  }
  // Dominant wind: roots (c -+ sqrt(c^2 - q(a-1)))/(a-1) exist only
  // strictly downwind with nonnegative discriminant; first arrival is the
  // smaller root, q/(c + sqrt(disc)).
  if (c <= 0.0) {
    throw UnreachableDirectionError(
        "dominant wind: direction is not downwind, no finite travel time");
  }
  const double disc = c * c - q * (a - 1.0);
  if (disc < 0.0) {
    throw UnreachableDirectionError(
        "dominant wind: displacement outside the reachable cone");
  }
  return q / (c + std::sqrt(disc));
}

double fubini_study_angle(const PureState& a, const PureState& b) {
  const double fid =
      std::clamp(projective_fidelity(a, b), 0.0, 1.0);
  return 2.0 * std::acos(fid);
}

TangentData quantum_tangent_data(const HermitianOperator& h0,
                                 const HermitianOperator& h1,
                                 const PureState& psi) {
  const HermitianOperator total(h0.matrix() + h1.matrix());
  const double wind_norm_sq = 4.0 * variance(h0, psi);
  const double xi_norm_sq = 4.0 * variance(total, psi);
  const double wind_dot_xi = 4.0 * covariance(h0, total, psi);
  return TangentData(wind_norm_sq, xi_norm_sq, wind_dot_xi);
}

double path_journey_time(const Trajectory& states,
                         const HermitianOperator& h0) {
  if (states.times.size() < 2) {
    throw Error("path_journey_time needs at least two samples");
  }
  double total = 0.0;
  // Left Riemann sum: the last sample carries no step of its own.
  for (std::size_t k = 0; k + 1 < states.times.size(); ++k) {
    const TangentData td =
        quantum_tangent_data(h0, states.controls[k], states.states[k]);
    total += randers_time(td) * states.step;
  }
  return total;
}

}  // namespace qznav
