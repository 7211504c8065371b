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

#ifndef QZNAV_PROBLEM_IO_HPP
#define QZNAV_PROBLEM_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "qznav/oracle.hpp"
#include "qznav/solver.hpp"
#include "qznav/types.hpp"

/// @file problem_io.hpp
/// Problem files and result documents. Problems are JSON with complex
/// data as paired real/imag arrays (never strings), so round trips are
/// bit exact; time series go to CSV with locale-independent formatting.

namespace qznav {

/// A parsed problem file. h0 is stored symmetrised and the states
/// renormalised, exactly as to_navigation_problem will consume them.
/// epsilon, when present, scales the drift: the effective wind is
/// epsilon * h0 (the sweep command overrides it per row).
struct ProblemFile {
  Eigen::Index dimension = 0;
  Matrix h0;
  Vector psi_i;
  Vector psi_f;
  std::optional<double> epsilon;
  std::optional<double> root_tol;
  std::optional<double> t_max;
};

/// Parses a problem document. Malformed structure, non-Hermitian drift
/// (beyond 1e-9 max-abs) or unnormalisable states raise ParseError with
/// the offending field named. Near-unit state norms are renormalised
/// silently; deviations beyond the wrapper tolerance are renormalised
/// with a note appended to warnings.
ProblemFile parse_problem_json(const std::string& text,
                               std::vector<std::string>* warnings = nullptr);

/// Reads and parses a problem file from disk.
ProblemFile load_problem_file(const std::string& path,
                              std::vector<std::string>* warnings = nullptr);

/// Canonical JSON for a parsed problem: normalised data, sorted keys,
/// shortest round-trip number formatting. Parsing the output reproduces
/// the ProblemFile bit for bit.
std::string dump_normalized(const ProblemFile& pf);

/// Builds the solver input. epsilon_override, when given, replaces the
/// file's epsilon; absent both, the drift is used unscaled.
NavigationProblem to_navigation_problem(
    const ProblemFile& pf, std::optional<double> epsilon_override = {});

/// Solution document: journey time, control, diagnostics, pass verdict.
std::string solution_to_json(const NavigationSolution& sol, double root_tol,
                             const std::string& failed_check);

/// Optimality report document.
std::string report_to_json(const OptimalityReport& report);

/// Shortest round-trip decimal form of x (to_chars); locale-independent.
std::string format_double(double x);

/// One CSV line from cells, newline-terminated.
std::string csv_row(const std::vector<std::string>& cells);

/// Bloch sphere coordinates of a two-dimensional state (a, b):
/// x = 2 Re(conj(a) b), y = 2 Im(conj(a) b), z = |a|^2 - |b|^2.
struct BlochPoint {
  double t;
  double x;
  double y;
  double z;
};

/// Maps a two-level state to its Bloch point at time t.
BlochPoint bloch_point(double t, const PureState& psi);

}  // namespace qznav

#endif  // QZNAV_PROBLEM_IO_HPP
