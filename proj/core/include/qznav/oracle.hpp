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

#ifndef QZNAV_ORACLE_HPP
#define QZNAV_ORACLE_HPP

#include <cstdint>
#include <optional>

#include "qznav/propagator.hpp"
#include "qznav/solver.hpp"
#include "qznav/types.hpp"

/// @file oracle.hpp
/// Brute-force optimality evidence. Samples admissible competitor
/// controls (unit throttle, horizontal), races them against the solver's
/// journey time, and reports whether any of them arrives earlier. This is
/// statistical evidence at desk scale, not a proof.

namespace qznav {

/// Statistical evidence that no sampled admissible schedule beats t_star.
struct OptimalityReport {
  double t_star = 0.0;
  double dt = 0.0;
  std::size_t n_samples = 0;  // per competitor family
  std::uint64_t seed = 0;
  double fid_threshold = 0.0;
  double horizon = 0.0;  // propagation horizon used for every schedule
  bool trivial = false;
  bool solver_arrived = false;
  double solver_arrival = -1.0;
  std::size_t n_arrived = 0;  // competitors arriving within the horizon
  double min_competitor_arrival = -1.0;
  double orbit_min_arrival = -1.0;      // frozen-in-moving-frame family
  double piecewise_min_arrival = -1.0;  // 4-segment piecewise family
  bool pass = false;
};

/// A uniformly random horizontal control at psi with unit throttle
/// (2 tr = 1). Deterministic in the seed.
HermitianOperator random_horizontal_control(const PureState& psi,
                                            std::uint64_t seed);

/// Earliest grid time at which propagating h0 + schedule from psi_i
/// reaches fidelity >= fid_threshold with psi_f, or nullopt within
/// p.t_max. Rejects schedules whose throttle exceeds 1 + 1e-9.
std::optional<double> first_arrival_time(const ControlSchedule& schedule,
                                         const NavigationProblem& p,
                                         double fid_threshold, double dt);

/// Races n_samples frozen-in-moving-frame competitors plus n_samples
/// 4-segment piecewise-constant competitors (each segment horizontal at
/// the state where it starts) against the solved t_star. PASS means the
/// solver's own schedule arrives and no competitor beats t_star - 5 dt.
OptimalityReport optimality_certificate(const NavigationProblem& p,
                                        std::size_t n_samples, double dt,
                                        double fid_threshold = 1.0 - 1e-6,
                                        std::uint64_t seed = 20260822);

}  // namespace qznav

#endif  // QZNAV_ORACLE_HPP
