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

#ifndef QZNAV_SOLVER_HPP
#define QZNAV_SOLVER_HPP

#include <string>

#include "qznav/types.hpp"

/// @file solver.hpp
/// The navigation solver. Given a drift Hamiltonian and two rays, it
/// finds the minimal transfer time T as the smallest positive solution of
///
///   2 arccos |<psi_i| e^{+i h0 T} |psi_f>| = T,
///
/// builds the initial control explicitly from the endpoints, and exposes
/// the control at later times as the drift conjugation of the initial
/// one. The full evolution has the closed form
/// e^{-i h0 t} e^{-i h1(0) t} |psi_i>, which verify_solution checks
/// against every property the solution is supposed to have.

namespace qznav {

/// A navigation instance: drift h0, start ray psi_i, target ray psi_f,
/// plus root-search knobs. scan_step = 0 picks the step automatically
/// from the drift's spectral norm.
struct NavigationProblem {
  NavigationProblem(HermitianOperator h0_in, PureState psi_i_in,
                    PureState psi_f_in);

  HermitianOperator h0;
  PureState psi_i;
  PureState psi_f;
  double t_max = 12.566370614359172;  // 4 pi
  double root_tol = 1e-12;
  double scan_step = 0.0;
};

/// Residuals of every claim made about a solution. All entries are
/// nonnegative; small is good. next_root is the next self-consistent
/// arrival time beyond t_star found in the scan, -1 when none exists
/// below the horizon (reported because degenerate drifts can produce
/// near-ties that theory does not break).
struct SolutionDiagnostics {
  double arrival_fidelity = 0.0;
  double norm_residual = 0.0;
  double horizontality_residual = 0.0;
  double full_throttle_residual = 0.0;
  double unit_cost_residual = 0.0;
  double frame_consistency_residual = 0.0;
  double theta_residual = 0.0;
  double next_root = -1.0;
  bool trivial = false;
};

/// Acceptance thresholds applied to SolutionDiagnostics.
struct VerificationThresholds {
  double arrival_deficit = 1e-9;
  double norm = 1e-9;
  double horizontality = 1e-8;
  double full_throttle = 1e-6;
  double unit_cost = 1e-6;
  double frame_deficit = 1e-9;
  double theta_factor = 10.0;  // times root_tol
};

/// A solved instance. theta is the angular distance covered at time
/// t_star and equals t_star to within root tolerance (unit evolution
/// speed); aligned_psi_f carries the global phase that makes the frame
/// overlap real, with the sign for which the explicit control formula
/// transports the start ray onto the target ray.
struct NavigationSolution {
  double t_star;
  HermitianOperator h1_initial;
  PureState psi_i;
  PureState aligned_psi_f;
  double theta;
  SolutionDiagnostics diagnostics;
};

/// Smallest positive self-consistent arrival time, or 0 for coincident
/// rays. Throws HorizonExceededError when no root exists below t_max.
double journey_time(const NavigationProblem& p);

/// The target ray rephased so that <psi_i| e^{+i h0 t_star} |psi_f> is
/// real and nonpositive, the gauge in which the explicit control formula
/// navigates. Returns psi_f unchanged when the overlap vanishes
/// (antipodal endpoints; the convention is vacuous there).
PureState align_phase(const NavigationProblem& p, double t_star);

/// The explicit initial control built from the phase-aligned endpoints.
/// Hermitian, unit Hilbert-Schmidt throttle (2 tr = 1), horizontal at
/// psi_i. Throws SingularControlError when sin(t_star/2) vanishes for
/// distinct rays; returns the zero operator for the trivial instance.
HermitianOperator initial_control(const NavigationProblem& p, double t_star);

/// Control at time t: the drift conjugation e^{-i h0 t} h1(0) e^{+i h0 t}.
HermitianOperator control_at(const NavigationSolution& sol,
                             const HermitianOperator& h0, double t);

/// Exact state at time t: e^{-i h0 t} e^{-i h1(0) t} |psi_i>.
PureState propagate_closed_form(const NavigationSolution& sol,
                                const HermitianOperator& h0, double t);

/// Full pipeline: journey time, phase alignment, initial control, and
/// verification diagnostics.
NavigationSolution solve(const NavigationProblem& p);

/// Recomputes every diagnostic residual of sol against p from scratch.
SolutionDiagnostics verify_solution(const NavigationProblem& p,
                                    const NavigationSolution& sol);

/// Name of the first diagnostic exceeding its threshold, empty when all
/// pass.
std::string failing_check(const SolutionDiagnostics& diag,
                          double root_tol,
                          const VerificationThresholds& thresholds = {});

/// The scan step actually used for p's root search.
double effective_scan_step(const NavigationProblem& p);

}  // namespace qznav

#endif  // QZNAV_SOLVER_HPP
