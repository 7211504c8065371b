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

#ifndef QZNAV_TOOLS_COMMANDS_HPP
#define QZNAV_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace qznav::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitHorizon = 3;

// Options common to every subcommand. tol_linalg = 0 keeps the default
// wrapper tolerances; a positive value rescales them proportionally, with
// the given value becoming the hermiticity tolerance.
struct CommonOptions {
  std::string problem_path;
  std::string out_path;  // empty writes to stdout
  std::optional<double> epsilon;
  std::optional<double> t_max;
  double tol_linalg = 0.0;
};

struct SolveOptions {
  CommonOptions common;
  bool dump_normalized = false;
};

struct TrajectoryOptions {
  CommonOptions common;
  double dt = 1e-3;
};

struct SweepOptions {
  CommonOptions common;
  double eps_min = 0.0;
  double eps_max = 1.0;
  unsigned steps = 101;
};

struct VerifyOptions {
  CommonOptions common;
  double perturb = 0.0;
};

struct OracleOptions {
  CommonOptions common;
  std::size_t samples = 2000;
  double dt = 1e-3;
  std::uint64_t seed = 20260822;
};

int cmd_solve(const SolveOptions& opt);
int cmd_trajectory(const TrajectoryOptions& opt);
int cmd_sweep(const SweepOptions& opt);
int cmd_verify(const VerifyOptions& opt);
int cmd_oracle(const OracleOptions& opt);

}  // namespace qznav::cli

#endif  // QZNAV_TOOLS_COMMANDS_HPP
