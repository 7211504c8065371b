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

#ifndef QZNAV_PROPAGATOR_HPP
#define QZNAV_PROPAGATOR_HPP

#include <functional>
#include <memory>
#include <vector>

#include "qznav/linalg.hpp"
#include "qznav/trajectory.hpp"
#include "qznav/types.hpp"

/// @file propagator.hpp
/// Time-ordered propagation of H(t) = H0 + H1(t), independent of any
/// closed-form shortcut. Second-order midpoint exponential stepping:
/// every step applies the exact exponential of the midpoint Hamiltonian,
/// so the numerical flow is unitary regardless of dt.

namespace qznav {

/// Time-indexed source of control Hamiltonians H1(t). Piecewise-constant
/// schedules expose their segment structure so the propagator can reuse
/// one step unitary per segment.
class ControlSchedule {
 public:
  using ControlFn = std::function<Matrix(double)>;

  /// No control at all.
  static ControlSchedule zero(Eigen::Index dim);

  /// H1(t) = k for all t.
  static ControlSchedule constant(const HermitianOperator& k);

  /// The conjugation family H1(t) = e^{-i h0 t} k e^{+i h0 t}.
  static ControlSchedule adjoint_orbit(const HermitianOperator& h0,
                                       const HermitianOperator& k);

  /// segments[i] in force on [edges[i], edges[i+1]) where the edges are
  /// the given internal boundaries (ascending) padded with 0 and
  /// +infinity; segments.size() == boundaries.size() + 1.
  static ControlSchedule piecewise_constant(
      std::vector<double> boundaries, std::vector<HermitianOperator> segments);

  /// Arbitrary callable; fn(t) must return a Hermitian dim x dim matrix.
  static ControlSchedule from_function(Eigen::Index dim, ControlFn fn);

  Matrix control(double t) const { return fn_(t); }
  Eigen::Index dim() const { return dim_; }

  /// Segment containing t for piecewise-constant schedules, -1 otherwise.
  std::ptrdiff_t segment_index(double t) const;

 private:
  ControlSchedule(Eigen::Index dim, ControlFn fn)
      : dim_(dim), fn_(std::move(fn)) {}

  Eigen::Index dim_;
  ControlFn fn_;
  std::vector<double> boundaries_;
  std::shared_ptr<const std::vector<Matrix>> segments_;
};

/// Propagates psi0 under H0 + schedule from time 0 to t_end on a uniform
/// grid of at most dt-sized steps (the step is shrunk so the grid ends
/// exactly at t_end). Every recorded state is renormalised; the recorded
/// controls are the schedule sampled at the grid times.
Trajectory propagate_ordered(const HermitianOperator& h0,
                             const ControlSchedule& schedule,
                             const PureState& psi0, double t_end, double dt);

/// Streaming variant: instead of storing the trajectory, invokes
/// observe(k, t_k, psi_k) at every grid point (including k = 0) and stops
/// early when it returns false. Returns the number of grid points visited.
/// on_control, when given, sees every freshly evaluated control (each
/// midpoint for general schedules, each segment once for
/// piecewise-constant ones) and may throw to abort the propagation.
std::size_t propagate_observe(
    const HermitianOperator& h0, const ControlSchedule& schedule,
    const PureState& psi0, double t_end, double dt,
    const std::function<bool(std::size_t, double, const Vector&)>& observe,
    const std::function<void(double, const Matrix&)>& on_control = {});

/// Residual of the evolution identity for the interaction-picture
/// propagator u(t) = e^{-i h0 t} e^{-i h1_initial t}: compares the
/// central finite difference of u at t (half-width delta) against
/// -i (h0 + e^{-i h0 t} h1_initial e^{+i h0 t}) u(t). Max-abs entrywise;
/// decays as O(delta^2).
double derivative_residual(const HermitianOperator& h0,
                           const HermitianOperator& h1_initial, double t,
                           double delta);

}  // namespace qznav

#endif  // QZNAV_PROPAGATOR_HPP
