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

#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qznav/errors.hpp"

namespace {

using qznav::cli::CommonOptions;

// CLI11 stores into plain doubles; sentinel-free optionals need explicit
// wiring.
void add_common_options(CLI::App& cmd, CommonOptions& common,
                        double& epsilon_storage, double& t_max_storage,
                        bool& epsilon_set, bool& t_max_set) {
  cmd.add_option("--problem", common.problem_path,
                 "Path to a JSON problem file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd.add_option("--out", common.out_path,
                 "Output path (stdout when omitted)");
  cmd.add_option("--epsilon", epsilon_storage,
                 "Override the drift scale epsilon")
      ->each([&epsilon_set](const std::string&) { epsilon_set = true; });
  cmd.add_option("--t-max", t_max_storage, "Root-search horizon")
      ->each([&t_max_set](const std::string&) { t_max_set = true; });
  cmd.add_option("--tol-linalg", common.tol_linalg,
                 "Rescale wrapper validation tolerances; the value becomes "
                 "the hermiticity tolerance (default 1e-12)");
}

void finalize_common(CommonOptions& common, double epsilon_storage,
                     double t_max_storage, bool epsilon_set, bool t_max_set) {
  if (epsilon_set) {
    common.epsilon = epsilon_storage;
  }
  if (t_max_set) {
    common.t_max = t_max_storage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qznav: time-optimal navigation of quantum states through a "
      "background field"};
  app.require_subcommand(1);

  qznav::cli::SolveOptions solve_opt;
  qznav::cli::TrajectoryOptions traj_opt;
  qznav::cli::SweepOptions sweep_opt;
  qznav::cli::VerifyOptions verify_opt;
  qznav::cli::OracleOptions oracle_opt;

  struct CommonWiring {
    double epsilon = 0.0;
    double t_max = 0.0;
    bool epsilon_set = false;
    bool t_max_set = false;
  };
  CommonWiring wiring[5];

  CLI::App* solve_cmd = app.add_subcommand(
      "solve", "Journey time, optimal control, and diagnostics as JSON");
  add_common_options(*solve_cmd, solve_opt.common, wiring[0].epsilon,
                     wiring[0].t_max, wiring[0].epsilon_set,
                     wiring[0].t_max_set);
  solve_cmd->add_flag("--dump-normalized", solve_opt.dump_normalized,
                      "Emit the parsed problem in canonical form and exit");

  CLI::App* traj_cmd = app.add_subcommand(
      "trajectory", "Optimal trajectory time series as CSV");
  add_common_options(*traj_cmd, traj_opt.common, wiring[1].epsilon,
                     wiring[1].t_max, wiring[1].epsilon_set,
                     wiring[1].t_max_set);
  traj_cmd->add_option("--dt", traj_opt.dt, "Sampling step (default 1e-3)");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Journey time against drift scale epsilon as CSV");
  add_common_options(*sweep_cmd, sweep_opt.common, wiring[2].epsilon,
                     wiring[2].t_max, wiring[2].epsilon_set,
                     wiring[2].t_max_set);
  sweep_cmd->add_option("--eps-min", sweep_opt.eps_min,
                        "Smallest epsilon (default 0)");
  sweep_cmd->add_option("--eps-max", sweep_opt.eps_max,
                        "Largest epsilon (default 1)");
  sweep_cmd->add_option("--steps", sweep_opt.steps,
                        "Number of sweep rows (default 101)");

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Re-derive and check every solution property");
  add_common_options(*verify_cmd, verify_opt.common, wiring[3].epsilon,
                     wiring[3].t_max, wiring[3].epsilon_set,
                     wiring[3].t_max_set);
  verify_cmd->add_option(
      "--perturb", verify_opt.perturb,
      "Inject a vertical component of this size into the control");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Race sampled admissible controls against the solver");
  add_common_options(*oracle_cmd, oracle_opt.common, wiring[4].epsilon,
                     wiring[4].t_max, wiring[4].epsilon_set,
                     wiring[4].t_max_set);
  oracle_cmd->add_option("--samples", oracle_opt.samples,
                         "Samples per competitor family (default 2000)");
  oracle_cmd->add_option("--dt", oracle_opt.dt,
                         "Propagation step (default 1e-3)");
  oracle_cmd->add_option("--seed", oracle_opt.seed,
                         "Deterministic sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return qznav::cli::kExitUsage;
  }

  finalize_common(solve_opt.common, wiring[0].epsilon, wiring[0].t_max,
                  wiring[0].epsilon_set, wiring[0].t_max_set);
  finalize_common(traj_opt.common, wiring[1].epsilon, wiring[1].t_max,
                  wiring[1].epsilon_set, wiring[1].t_max_set);
  finalize_common(sweep_opt.common, wiring[2].epsilon, wiring[2].t_max,
                  wiring[2].epsilon_set, wiring[2].t_max_set);
  finalize_common(verify_opt.common, wiring[3].epsilon, wiring[3].t_max,
                  wiring[3].epsilon_set, wiring[3].t_max_set);
  finalize_common(oracle_opt.common, wiring[4].epsilon, wiring[4].t_max,
                  wiring[4].epsilon_set, wiring[4].t_max_set);

  try {
    if (solve_cmd->parsed()) {
      return qznav::cli::cmd_solve(solve_opt);
    }
    if (traj_cmd->parsed()) {
      return qznav::cli::cmd_trajectory(traj_opt);
    }
    if (sweep_cmd->parsed()) {
      return qznav::cli::cmd_sweep(sweep_opt);
    }
    if (verify_cmd->parsed()) {
      return qznav::cli::cmd_verify(verify_opt);
    }
    if (oracle_cmd->parsed()) {
      return qznav::cli::cmd_oracle(oracle_opt);
    }
  } catch (const qznav::ParseError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return qznav::cli::kExitUsage;
  } catch (const qznav::HorizonExceededError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return qznav::cli::kExitHorizon;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return qznav::cli::kExitNumerical;
  }
  return qznav::cli::kExitUsage;
}
