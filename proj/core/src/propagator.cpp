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

#include "qznav/propagator.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qznav/errors.hpp"

namespace qznav {

ControlSchedule ControlSchedule::zero(Eigen::Index dim) {
  return constant(HermitianOperator::zero(dim));
}

ControlSchedule ControlSchedule::constant(const HermitianOperator& k) {
  return piecewise_constant({}, {k});
}

ControlSchedule ControlSchedule::adjoint_orbit(const HermitianOperator& h0,
                                               const HermitianOperator& k) {
  if (h0.dim() != k.dim()) {
    throw DimensionMismatchError(
        "adjoint_orbit: drift and control dimensions differ");
  }
  auto flow = std::make_shared<HamiltonianFlow>(h0);
  Matrix k_mat = k.matrix();
  return ControlSchedule(
      h0.dim(), [flow, k_mat](double t) { return flow->conjugate(t, k_mat); });
}

ControlSchedule ControlSchedule::piecewise_constant(
    std::vector<double> boundaries, std::vector<HermitianOperator> segments) {
  if (segments.empty()) {
    throw Error("piecewise_constant: needs at least one segment");
  }
  if (boundaries.size() + 1 != segments.size()) {
    throw Error(
        "piecewise_constant: boundary count must be segment count minus one");
  }
  if (!std::is_sorted(boundaries.begin(), boundaries.end())) {
    throw Error("piecewise_constant: boundaries must be ascending");
  }
  const Eigen::Index dim = segments.front().dim();
  auto mats = std::make_shared<std::vector<Matrix>>();
  mats->reserve(segments.size());
  for (const HermitianOperator& seg : segments) {
    if (seg.dim() != dim) {
      throw DimensionMismatchError(
          "piecewise_constant: segments have different dimensions");
    }
    mats->push_back(seg.matrix());
  }
  std::vector<double> edges = boundaries;
  ControlSchedule schedule(dim, [mats, edges](double t) {
    const std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(edges.begin(), edges.end(), t) - edges.begin());
    return (*mats)[idx];
  });
  schedule.boundaries_ = std::move(boundaries);
  schedule.segments_ = mats;
  return schedule;
}

ControlSchedule ControlSchedule::from_function(Eigen::Index dim,
                                              ControlFn fn) {
  if (!fn) {
    throw Error("from_function: empty callable");
  }
  return ControlSchedule(dim, std::move(fn));
}

std::ptrdiff_t ControlSchedule::segment_index(double t) const {
  if (!segments_) {
    return -1;
  }
  return std::upper_bound(boundaries_.begin(), boundaries_.end(), t) -
         boundaries_.begin();
}

namespace {

struct Grid {
  std::size_t steps;
  double dt;
};

Grid make_grid(double t_end, double dt) {
  if (!std::isfinite(t_end) || !std::isfinite(dt) || dt <= 0.0 ||
      t_end < 0.0) {
    throw Error("propagation needs finite t_end >= 0 and dt > 0");
  }
  if (t_end == 0.0) {
    return Grid{0, dt};
  }
  const auto steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(t_end / dt - 1e-12)));
  return Grid{steps, t_end / static_cast<double>(steps)};
}

}  // namespace

std::size_t propagate_observe(
    const HermitianOperator& h0, const ControlSchedule& schedule,
    const PureState& psi0, double t_end, double dt,
    const std::function<bool(std::size_t, double, const Vector&)>& observe,
    const std::function<void(double, const Matrix&)>& on_control) {
  if (h0.dim() != schedule.dim() || h0.dim() != psi0.dim()) {
    throw DimensionMismatchError("propagate: operand dimensions differ");
  }
  const Grid grid = make_grid(t_end, dt);
  Vector psi = psi0.vector();
  if (!observe(0, 0.0, psi)) {
    return 1;
  }
  // One cached step unitary per piecewise-constant segment; recomputed
  // every step otherwise.
  Matrix step_unitary;
  std::ptrdiff_t cached_segment = -2;
  for (std::size_t k = 0; k < grid.steps; ++k) {
    const double t_mid = (static_cast<double>(k) + 0.5) * grid.dt;
    const std::ptrdiff_t segment = schedule.segment_index(t_mid);
    if (segment < 0 || segment != cached_segment) {
      const Matrix control = schedule.control(t_mid);
      if (on_control) {
        on_control(t_mid, control);
      }
      step_unitary = detail::expm_matrix(h0.matrix() + control, grid.dt);
      cached_segment = segment;
    }
    psi = step_unitary * psi;
    psi /= psi.norm();
    if (!observe(k + 1, static_cast<double>(k + 1) * grid.dt, psi)) {
      return k + 2;
    }
  }
  return grid.steps + 1;
}

Trajectory propagate_ordered(const HermitianOperator& h0,
                             const ControlSchedule& schedule,
                             const PureState& psi0, double t_end, double dt) {
  const Grid grid = make_grid(t_end, dt);
  Trajectory traj;
  traj.step = grid.dt;
  traj.times.reserve(grid.steps + 1);
  traj.states.reserve(grid.steps + 1);
  traj.controls.reserve(grid.steps + 1);
  propagate_observe(h0, schedule, psi0, t_end, dt,
                    [&](std::size_t, double t, const Vector& psi) {
                      traj.times.push_back(t);
                      traj.states.push_back(PureState::normalized(psi));
                      traj.controls.emplace_back(schedule.control(t));
                      return true;
                    });
  return traj;
}

double derivative_residual(const HermitianOperator& h0,
                           const HermitianOperator& h1_initial, double t,
                           double delta) {
  if (h0.dim() != h1_initial.dim()) {
    throw DimensionMismatchError(
        "derivative_residual: operand dimensions differ");
  }
  if (!(delta > 0.0) || !std::isfinite(delta) || !std::isfinite(t)) {
    throw Error("derivative_residual: needs finite t and delta > 0");
  }
  const HamiltonianFlow drift(h0);
  const HamiltonianFlow control(h1_initial);
  const auto u_at = [&](double s) {
    return Matrix(drift.flow(s) * control.flow(s));
  };
  const Matrix diff =
      (u_at(t + delta) - u_at(t - delta)) / (2.0 * delta);
  const Matrix h_total =
      h0.matrix() + drift.conjugate(t, h1_initial.matrix());
  const Matrix residual =
      diff + Complex(0.0, 1.0) * h_total * u_at(t);
  return residual.cwiseAbs().maxCoeff();
}

}  // namespace qznav
