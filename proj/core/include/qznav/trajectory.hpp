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

#ifndef QZNAV_TRAJECTORY_HPP
#define QZNAV_TRAJECTORY_HPP

#include <vector>

#include "qznav/types.hpp"

namespace qznav {

/// A time-stamped evolution record on a uniform grid times[k] = k * step.
/// states[k] is the state at times[k]; controls[k] is the control
/// Hamiltonian in force there (the drift is carried separately by whoever
/// produced the trajectory).
struct Trajectory {
  std::vector<double> times;
  std::vector<PureState> states;
  std::vector<HermitianOperator> controls;
  double step = 0.0;
};

}  // namespace qznav

#endif  // QZNAV_TRAJECTORY_HPP
