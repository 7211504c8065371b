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

#ifndef QZNAV_GEOMETRY_HPP
#define QZNAV_GEOMETRY_HPP

#include "qznav/trajectory.hpp"
#include "qznav/types.hpp"

/// @file geometry.hpp
/// Travel-time geometry of navigation through wind.
///
/// The central object is the Randers travel-time function F: given a wind
/// vector w and a desired displacement direction xi in a tangent space, F
/// is the time a unit-own-speed vehicle needs to realise xi. Only the
/// three scalars |w|^2, |xi|^2, <w,xi> enter, so that triple is the
/// tangent-space type. The quantum instantiation plugs in Fubini-Study
/// tangent data, where squared speed is four times the generating
/// Hamiltonian's variance.

namespace qznav {

/// Scalar shadow of a (wind, displacement) pair in a tangent space.
/// All three fields are in squared-speed units of the ambient metric.
struct TangentData {
  /// Validates nonnegativity and the Cauchy-Schwarz bound.
  TangentData(double wind_norm_sq, double xi_norm_sq, double wind_dot_xi);

  double wind_norm_sq;
  double xi_norm_sq;
  double wind_dot_xi;
};

/// Travel time F for the displacement described by td.
///
/// For sub-unit wind this is the classical Randers expression; at unit
/// wind it degenerates to the Kropina form |xi|^2 / (2 <w,xi>); for
/// dominant wind (|w| > 1) the smaller positive root of the underlying
/// quadratic is returned when one exists, and directions the wind makes
/// unreachable raise UnreachableDirectionError.
double randers_time(const TangentData& td);

/// Angular distance theta = 2 arccos |<a|b>| between two rays, in [0, pi].
double fubini_study_angle(const PureState& a, const PureState& b);

/// Fubini-Study tangent data of the motion generated by h0 + h1 at psi,
/// against the wind generated by h0 alone. Uses the normalisation in
/// which squared evolution speed equals 4 Var(H).
TangentData quantum_tangent_data(const HermitianOperator& h0,
                                 const HermitianOperator& h1,
                                 const PureState& psi);

/// Journey time along a sampled trajectory: left Riemann sum of the
/// per-sample travel time of the trajectory's own velocity. Equals the
/// elapsed time whenever the trajectory moves at full throttle.
double path_journey_time(const Trajectory& states,
                         const HermitianOperator& h0);

}  // namespace qznav

#endif  // QZNAV_GEOMETRY_HPP
