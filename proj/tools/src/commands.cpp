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

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "qznav/errors.hpp"
#include "qznav/geometry.hpp"
#include "qznav/horizontality.hpp"
#include "qznav/linalg.hpp"
#include "qznav/oracle.hpp"
#include "qznav/problem_io.hpp"
#include "qznav/solver.hpp"

namespace qznav::cli {

namespace {

void apply_tolerance_scale(double tol_linalg) {
  if (tol_linalg <= 0.0) {
    return;
  }
  const double scale = tol_linalg / 1e-12;
  LinalgTolerances& tol = linalg_tolerances();
  tol.hermiticity = tol_linalg;
  tol.unitarity = 1e-10 * scale;
  tol.state_norm = 1e-12 * scale;
}

// Loads the problem, applies command-line overrides, and reports any
// renormalisation warnings on stderr.
ProblemFile load_with_warnings(const CommonOptions& common) {
  apply_tolerance_scale(common.tol_linalg);
  std::vector<std::string> warnings;
  ProblemFile pf = load_problem_file(common.problem_path, &warnings);
  for (const std::string& w : warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return pf;
}

NavigationProblem build_problem(const ProblemFile& pf,
                                const CommonOptions& common) {
  NavigationProblem p = to_navigation_problem(pf, common.epsilon);
  if (common.t_max) {
    p.t_max = *common.t_max;
  }
  return p;
}

void write_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error("cannot open output file: " + out_path);
  }
  out << text;
}

std::string sanitize_csv_cell(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

struct CheckRow {
  std::string name;
  double value;
  std::string bound;
  bool ok;
};

void print_check_table(const std::vector<CheckRow>& rows) {
  std::size_t name_width = 5;
  for (const CheckRow& row : rows) {
    name_width = std::max(name_width, row.name.size());
  }
  for (const CheckRow& row : rows) {
    std::cout << (row.ok ? "PASS  " : "FAIL  ") << row.name
              << std::string(name_width - row.name.size() + 2, ' ')
              << format_double(row.value) << "  (require " << row.bound
              << ")\n";
  }
}

std::vector<CheckRow> diagnostics_rows(const SolutionDiagnostics& diag,
                                       double root_tol) {
  const VerificationThresholds thr;
  return {
      {"arrival_fidelity", diag.arrival_fidelity,
       ">= 1 - " + format_double(thr.arrival_deficit),
       1.0 - diag.arrival_fidelity <= thr.arrival_deficit},
      {"norm_residual", diag.norm_residual,
       "<= " + format_double(thr.norm), diag.norm_residual <= thr.norm},
      {"horizontality_residual", diag.horizontality_residual,
       "<= " + format_double(thr.horizontality),
       diag.horizontality_residual <= thr.horizontality},
      {"full_throttle_residual", diag.full_throttle_residual,
       "<= " + format_double(thr.full_throttle),
       diag.full_throttle_residual <= thr.full_throttle},
      {"unit_cost_residual", diag.unit_cost_residual,
       "<= " + format_double(thr.unit_cost),
       diag.unit_cost_residual <= thr.unit_cost},
      {"frame_consistency_residual", diag.frame_consistency_residual,
       "<= " + format_double(thr.frame_deficit),
       diag.frame_consistency_residual <= thr.frame_deficit},
      {"theta_residual", diag.theta_residual,
       "<= " + format_double(thr.theta_factor * root_tol),
       diag.theta_residual <= thr.theta_factor * root_tol},
  };
}

}  // namespace

int cmd_solve(const SolveOptions& opt) {
  const ProblemFile pf = load_with_warnings(opt.common);
  if (opt.dump_normalized) {
    write_text(opt.common.out_path, dump_normalized(pf));
    return kExitOk;
  }
  const NavigationProblem p = build_problem(pf, opt.common);
  const NavigationSolution sol = solve(p);
  const std::string failed = failing_check(sol.diagnostics, p.root_tol);
  write_text(opt.common.out_path, solution_to_json(sol, p.root_tol, failed));
  if (!failed.empty()) {
    std::cerr << "solution verification failed: " << failed << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_trajectory(const TrajectoryOptions& opt) {
  if (!(opt.dt > 0.0)) {
    std::cerr << "trajectory: --dt must be positive\n";
    return kExitUsage;
  }
  const ProblemFile pf = load_with_warnings(opt.common);
  const NavigationProblem p = build_problem(pf, opt.common);
  const NavigationSolution sol = solve(p);

  const HamiltonianFlow drift(p.h0);
  const HamiltonianFlow control(sol.h1_initial);
  const Eigen::Index dim = p.h0.dim();
  const bool bloch = (dim == 2);

  std::vector<std::string> header{"t"};
  for (Eigen::Index k = 0; k < dim; ++k) {
    header.push_back("re_" + std::to_string(k));
    header.push_back("im_" + std::to_string(k));
  }
  header.emplace_back("fidelity_to_target");
  header.emplace_back("throttle_residual");
  if (bloch) {
    header.emplace_back("bloch_x");
    header.emplace_back("bloch_y");
    header.emplace_back("bloch_z");
  }
  std::string csv = csv_row(header);

  const std::size_t steps =
      sol.t_star > 0.0
          ? std::max<std::size_t>(
                1, static_cast<std::size_t>(std::llround(sol.t_star / opt.dt)))
          : 0;
  const double dt =
      steps > 0 ? sol.t_star / static_cast<double>(steps) : opt.dt;
  double final_fidelity = 1.0;
  for (std::size_t k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const PureState state = PureState::normalized(
        drift.apply(t, control.apply(t, sol.psi_i.vector())));
    const HermitianOperator h1_t(drift.conjugate(t, sol.h1_initial.matrix()));
    const double fid = projective_fidelity(state, p.psi_f);
    const double throttle_residual =
        sol.diagnostics.trivial ? 0.0
                                : std::abs(aa_speed_sq(h1_t, state) - 1.0);
    final_fidelity = fid;
    std::vector<std::string> row{format_double(t)};
    for (Eigen::Index c = 0; c < dim; ++c) {
      row.push_back(format_double(state.vector()(c).real()));
      row.push_back(format_double(state.vector()(c).imag()));
    }
    row.push_back(format_double(fid));
    row.push_back(format_double(throttle_residual));
    if (bloch) {
      const BlochPoint bp = bloch_point(t, state);
      row.push_back(format_double(bp.x));
      row.push_back(format_double(bp.y));
      row.push_back(format_double(bp.z));
    }
    csv += csv_row(row);
  }
  write_text(opt.common.out_path, csv);
  if (final_fidelity < 1.0 - 1e-8) {
    std::cerr << "trajectory: final fidelity " << format_double(final_fidelity)
              << " misses the target\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_sweep(const SweepOptions& opt) {
  if (opt.steps < 1 || !(opt.eps_max >= opt.eps_min)) {
    std::cerr << "sweep: needs --steps >= 1 and --eps-max >= --eps-min\n";
    return kExitUsage;
  }
  const ProblemFile pf = load_with_warnings(opt.common);
  std::string csv = csv_row({"epsilon", "t_star", "theta", "error"});
  for (unsigned j = 0; j < opt.steps; ++j) {
    const double eps =
        opt.steps == 1
            ? opt.eps_min
            : opt.eps_min + (opt.eps_max - opt.eps_min) *
                                static_cast<double>(j) /
                                static_cast<double>(opt.steps - 1);
    std::string t_cell;
    std::string theta_cell;
    std::string error_cell;
    try {
      CommonOptions common = opt.common;
      common.epsilon = eps;
      const NavigationProblem p = build_problem(pf, common);
      const NavigationSolution sol = solve(p);
      const std::string failed = failing_check(sol.diagnostics, p.root_tol);
      t_cell = format_double(sol.t_star);
      theta_cell = format_double(sol.theta);
      if (!failed.empty()) {
        error_cell = sanitize_csv_cell("verification failed: " + failed);
      }
    } catch (const Error& err) {
      error_cell = sanitize_csv_cell(err.what());
    }
    csv += csv_row({format_double(eps), t_cell, theta_cell, error_cell});
  }
  write_text(opt.common.out_path, csv);
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt) {
  const ProblemFile pf = load_with_warnings(opt.common);
  const NavigationProblem p = build_problem(pf, opt.common);
  NavigationSolution sol = solve(p);
  if (opt.perturb != 0.0) {
    const std::vector<HermitianOperator> basis = stabilizer_basis(p.psi_i);
    if (basis.empty()) {
      std::cerr << "verify: --perturb has no effect in dimension 1\n";
    } else {
      // Injects a vertical component, deliberately breaking horizontality
      // (and with it the other optimality properties).
      sol.h1_initial = HermitianOperator(
          sol.h1_initial.matrix() + opt.perturb * basis.front().matrix());
    }
  }
  const SolutionDiagnostics diag = verify_solution(p, sol);
  print_check_table(diagnostics_rows(diag, p.root_tol));
  NavigationSolution reported = sol;
  reported.diagnostics = diag;
  const std::string failed = failing_check(diag, p.root_tol);
  write_text(opt.common.out_path,
             solution_to_json(reported, p.root_tol, failed));
  if (!failed.empty()) {
    std::cerr << "verification failed: " << failed << "\n";
    return kExitNumerical;
  }
  return kExitOk;
}

int cmd_oracle(const OracleOptions& opt) {
  if (!(opt.dt > 0.0)) {
    std::cerr << "oracle: --dt must be positive\n";
    return kExitUsage;
  }
  const ProblemFile pf = load_with_warnings(opt.common);
  const NavigationProblem p = build_problem(pf, opt.common);
  const OptimalityReport report =
      optimality_certificate(p, opt.samples, opt.dt, 1.0 - 1e-6, opt.seed);
  std::vector<CheckRow> rows{
      {"solver_arrival", report.solver_arrival,
       "<= " + format_double(report.t_star + 2.0 * opt.dt),
       report.solver_arrived &&
           report.solver_arrival <= report.t_star + 2.0 * opt.dt},
      {"min_competitor_arrival", report.min_competitor_arrival,
       ">= " + format_double(report.t_star - 5.0 * opt.dt),
       report.min_competitor_arrival < 0.0 ||
           report.min_competitor_arrival >= report.t_star - 5.0 * opt.dt},
  };
  print_check_table(rows);
  std::cout << (report.pass ? "PASS" : "FAIL") << "  optimality certificate ("
            << report.n_samples << " samples per family, seed " << report.seed
            << ")\n";
  write_text(opt.common.out_path, report_to_json(report));
  return report.pass ? kExitOk : kExitNumerical;
}

}  // namespace qznav::cli
