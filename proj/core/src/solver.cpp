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

#include "qznav/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "qznav/errors.hpp"
#include "qznav/geometry.hpp"
#include "qznav/horizontality.hpp"
#include "qznav/linalg.hpp"

namespace qznav {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Above this fidelity the endpoints are treated as the same ray.
constexpr double kCoincidentFidelity = 1.0 - 1e-12;

// Below this |sin(T/2)| the explicit control formula is singular.
constexpr double kSingularSine = 1e-9;

double scan_step_for(const NavigationProblem& p, double drift_norm) {
  if (p.scan_step > 0.0) {
    return p.scan_step;
  }
  return std::min(0.01, kPi / (64.0 * (1.0 + drift_norm)));
}

// Self-consistency deficit f(T) = 2 arccos|<psi_i|e^{+i h0 T}|psi_f>| - T.
// A journey time is a zero of f; the drift moves the target ray, so f is
// oscillatory, and the smallest positive zero is the answer.
class ArrivalDeficit {
 public:
  ArrivalDeficit(const NavigationProblem& p, const HamiltonianFlow& flow)
      : psi_i_(p.psi_i.vector()), psi_f_(p.psi_f.vector()), flow_(flow) {}

  double operator()(double t) const {
    const Vector moved = flow_.apply(-t, psi_f_);
    const double fid = std::min(1.0, std::abs(psi_i_.dot(moved)));
    return 2.0 * std::acos(fid) - t;
  }

 private:
  const Vector& psi_i_;
  const Vector& psi_f_;
  const HamiltonianFlow& flow_;
};

struct RootScan {
  double t_star = 0.0;
  double next_root = -1.0;
  double min_deficit = std::numeric_limits<double>::infinity();
  bool trivial = false;
};

// Bisection on a sign-change bracket with f(a) > 0 >= f(b); a and b are
// the positive and negative ends, not necessarily ordered. Returns the
// visited point with the smallest |f|.
double bisect(const ArrivalDeficit& f, double a, double b, double tol) {
  double best_t = b;
  double best_abs = std::abs(f(b));
  for (int iter = 0; iter < 200 && std::abs(b - a) > 0.25 * tol; ++iter) {
    const double mid = 0.5 * (a + b);
    const double fm = f(mid);
    if (std::abs(fm) < best_abs) {
      best_abs = std::abs(fm);
      best_t = mid;
    }
    if (fm > 0.0) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return best_t;
}

RootScan scan_roots(const NavigationProblem& p, const HamiltonianFlow& flow) {
  RootScan scan;
  if (projective_fidelity(p.psi_i, p.psi_f) >= kCoincidentFidelity) {
    scan.trivial = true;
    return scan;
  }
  const ArrivalDeficit f(p, flow);
  const double step = scan_step_for(p, flow.spectral_norm());
  std::vector<double> roots;
  double prev_t = 0.0;
  double prev_f = f(0.0);
  scan.min_deficit = prev_f;
  const auto total_steps =
      static_cast<std::size_t>(std::ceil(p.t_max / step));
  for (std::size_t k = 1; k <= total_steps && roots.size() < 2; ++k) {
    const double t = std::min(static_cast<double>(k) * step, p.t_max);
    const double ft = f(t);
    scan.min_deficit = std::min(scan.min_deficit, ft);
    const bool crossed = (prev_f > 0.0) != (ft > 0.0);
    if (crossed) {
      // Normalise the bracket so the positive side comes first.
      const double root = prev_f > 0.0 ? bisect(f, prev_t, t, p.root_tol)
                                       : bisect(f, t, prev_t, p.root_tol);
      roots.push_back(root);
    }
    prev_t = t;
    prev_f = ft;
  }
  if (roots.empty()) {
    std::ostringstream msg;
    msg << "no self-consistent arrival time in (0, " << p.t_max
        << "]; smallest deficit seen was " << scan.min_deficit;
    throw HorizonExceededError(msg.str(), scan.min_deficit, p.t_max);
  }
  scan.t_star = roots[0];
  if (roots.size() > 1) {
    scan.next_root = roots[1];
  }
  return scan;
}

PureState align_phase_impl(const NavigationProblem& p,
                           const HamiltonianFlow& flow, double t_star) {
  const Vector moved = flow.apply(-t_star, p.psi_f.vector());
  const Complex overlap = p.psi_i.vector().dot(moved);
  if (std::abs(overlap) < 1e-12) {
    return p.psi_f;
  }
  // Real NONPOSITIVE overlap. Of the two real gauges, this is the one for
  // which the explicit control below transports the start ray onto the
  // target ray; the other gauge sends it to the reflection of the target
  // across the start.
  const Complex factor = -std::conj(overlap) / std::abs(overlap);
  return PureState(factor * p.psi_f.vector());
}

HermitianOperator initial_control_impl(const NavigationProblem& p,
                                       const HamiltonianFlow& flow,
                                       double t_star) {
  const double sine = std::sin(0.5 * t_star);
  if (t_star <= 0.0 || std::abs(sine) < kSingularSine) {
    if (projective_fidelity(p.psi_i, p.psi_f) >= kCoincidentFidelity) {
      return HermitianOperator::zero(p.h0.dim());
    }
    std::ostringstream msg;
    msg << "control formula is singular at T = " << t_star
        << " (sin(T/2) vanishes for distinct rays); inspect the root scan";
    throw SingularControlError(msg.str());
  }
  const PureState aligned = align_phase_impl(p, flow, t_star);
  // chi is the phase-aligned target in the co-rotating frame; the control
  // is the generator of the great circle from psi_i towards chi.
  const Vector chi = flow.apply(-t_star, aligned.vector());
  const Matrix outer = p.psi_i.vector() * chi.adjoint();
  const Matrix h1 =
      (Complex(0.0, 1.0) / (2.0 * sine)) * (outer - outer.adjoint());
  return HermitianOperator(h1);
}

}  // namespace

NavigationProblem::NavigationProblem(HermitianOperator h0_in,
                                     PureState psi_i_in, PureState psi_f_in)
    : h0(std::move(h0_in)),
      psi_i(std::move(psi_i_in)),
      psi_f(std::move(psi_f_in)) {
  if (h0.dim() != psi_i.dim() || h0.dim() != psi_f.dim()) {
    throw DimensionMismatchError(
        "navigation problem: drift and state dimensions differ");
  }
}

double effective_scan_step(const NavigationProblem& p) {
  return scan_step_for(p, spectral_norm(p.h0));
}

double journey_time(const NavigationProblem& p) {
  const HamiltonianFlow flow(p.h0);
  const RootScan scan = scan_roots(p, flow);
  return scan.trivial ? 0.0 : scan.t_star;
}

PureState align_phase(const NavigationProblem& p, double t_star) {
  const HamiltonianFlow flow(p.h0);
  return align_phase_impl(p, flow, t_star);
}

HermitianOperator initial_control(const NavigationProblem& p, double t_star) {
  const HamiltonianFlow flow(p.h0);
  return initial_control_impl(p, flow, t_star);
}

HermitianOperator control_at(const NavigationSolution& sol,
                             const HermitianOperator& h0, double t) {
  const HamiltonianFlow flow(h0);
  return HermitianOperator(flow.conjugate(t, sol.h1_initial.matrix()));
}

PureState propagate_closed_form(const NavigationSolution& sol,
                                const HermitianOperator& h0, double t) {
  const HamiltonianFlow drift(h0);
  const HamiltonianFlow control(sol.h1_initial);
  return PureState::normalized(
      drift.apply(t, control.apply(t, sol.psi_i.vector())));
}

NavigationSolution solve(const NavigationProblem& p) {
  const HamiltonianFlow flow(p.h0);
  const RootScan scan = scan_roots(p, flow);
  NavigationSolution sol{0.0, HermitianOperator::zero(p.h0.dim()), p.psi_i,
                         p.psi_f, 0.0, SolutionDiagnostics{}};
  if (!scan.trivial) {
    sol.t_star = scan.t_star;
    sol.h1_initial = initial_control_impl(p, flow, scan.t_star);
    sol.aligned_psi_f = align_phase_impl(p, flow, scan.t_star);
    const Vector moved = flow.apply(-scan.t_star, sol.aligned_psi_f.vector());
    const double fid = std::min(1.0, std::abs(p.psi_i.vector().dot(moved)));
    sol.theta = 2.0 * std::acos(fid);
  } else {
    sol.aligned_psi_f = align_phase_impl(p, flow, 0.0);
  }
  sol.diagnostics = verify_solution(p, sol);
  sol.diagnostics.next_root = scan.next_root;
  sol.diagnostics.trivial = scan.trivial;
  return sol;
}

SolutionDiagnostics verify_solution(const NavigationProblem& p,
                                    const NavigationSolution& sol) {
  SolutionDiagnostics diag;
  diag.trivial = (sol.t_star <= 0.0);
  diag.next_root = sol.diagnostics.next_root;
  const HamiltonianFlow drift(p.h0);
  const HamiltonianFlow control(sol.h1_initial);
  const double t_star = sol.t_star;

  const Vector frame_state = control.apply(t_star, sol.psi_i.vector());
  const PureState at_end =
      PureState::normalized(drift.apply(t_star, frame_state));
  diag.arrival_fidelity = projective_fidelity(at_end, p.psi_f);

  const double throttle = 2.0 * hs_inner(sol.h1_initial, sol.h1_initial);
  diag.norm_residual = diag.trivial ? throttle : std::abs(throttle - 1.0);

  diag.horizontality_residual = vertical_residual(sol.h1_initial, sol.psi_i);

  // Boundary condition in the co-rotating frame: e^{-i h1(0) T} psi_i
  // must land on e^{+i h0 T} psi_f as a ray.
  const Vector moved_target = drift.apply(-t_star, p.psi_f.vector());
  diag.frame_consistency_residual =
      1.0 - std::min(1.0, std::abs(Vector(frame_state).dot(moved_target)) /
                              moved_target.norm());

  diag.theta_residual = std::abs(sol.theta - sol.t_star);

  if (!diag.trivial) {
    constexpr int kGridPoints = 100;
    double worst_throttle = 0.0;
    double worst_cost = 0.0;
    for (int j = 0; j < kGridPoints; ++j) {
      const double t = t_star * static_cast<double>(j) /
                       static_cast<double>(kGridPoints - 1);
      const PureState state = PureState::normalized(
          drift.apply(t, control.apply(t, sol.psi_i.vector())));
      const HermitianOperator h1_t(
          drift.conjugate(t, sol.h1_initial.matrix()));
      worst_throttle = std::max(
          worst_throttle, std::abs(aa_speed_sq(h1_t, state) - 1.0));
      double cost;
      try {
        cost = randers_time(quantum_tangent_data(p.h0, h1_t, state));
      } catch (const UnreachableDirectionError&) {
        cost = std::numeric_limits<double>::infinity();
      }
      worst_cost = std::max(worst_cost, std::abs(cost - 1.0));
    }
    diag.full_throttle_residual = worst_throttle;
    diag.unit_cost_residual = worst_cost;
  }
  return diag;
}

std::string failing_check(const SolutionDiagnostics& diag, double root_tol,
                          const VerificationThresholds& thresholds) {
  // The !(x <= bound) form deliberately fails on NaN. Control-property
  // violations are named before the arrival outcome: a corrupted control
  // usually breaks both, and the property is the diagnosable cause.
  if (!(diag.horizontality_residual <= thresholds.horizontality)) {
    return "horizontality";
  }
  if (!(diag.norm_residual <= thresholds.norm)) {
    return "norm_condition";
  }
  if (!(1.0 - diag.arrival_fidelity <= thresholds.arrival_deficit)) {
    return "arrival_fidelity";
  }
  if (!(diag.full_throttle_residual <= thresholds.full_throttle)) {
    return "full_throttle";
  }
  if (!(diag.unit_cost_residual <= thresholds.unit_cost)) {
    return "unit_cost";
  }
  if (!(diag.frame_consistency_residual <= thresholds.frame_deficit)) {
    return "frame_consistency";
  }
  if (!(diag.theta_residual <= thresholds.theta_factor * root_tol)) {
    return "theta_consistency";
  }
  return "";
}

}  // namespace qznav
