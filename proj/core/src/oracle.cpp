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

#include "qznav/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "qznav/errors.hpp"
#include "qznav/linalg.hpp"

namespace qznav {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kThrottleSlack = 1e-9;

// Gaussians via explicit Box-Muller on top of mt19937_64 bits, so the
// stream depends on nothing implementation-defined.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    spare_ = radius * std::sin(2.0 * kPi * u2);
    have_spare_ = true;
    return radius * std::cos(2.0 * kPi * u2);
  }

 private:
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;  // [0, 1)
  }

  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

// Uniformly random unit-throttle horizontal control at psi: a random
// direction u in the orthogonal complement of psi, coupled symmetrically,
// h = u psi^dag + psi u^dag with |u| = 1/2 so that 2 tr(h^2) = 1.
HermitianOperator sample_horizontal(const PureState& psi,
                                    GaussianStream& rng) {
  const Eigen::Index n = psi.dim();
  if (n < 2) {
    throw DimensionMismatchError(
        "no nontrivial horizontal directions exist below dimension 2");
  }
  const Vector& v = psi.vector();
  Vector u(n);
  double norm = 0.0;
  do {
    for (Eigen::Index k = 0; k < n; ++k) {
      u(k) = Complex(rng.next(), rng.next());
    }
    u -= v * v.dot(u);
    norm = u.norm();
  } while (norm < 1e-12);
  u *= 0.5 / norm;
  Matrix h = u * v.adjoint();
  h += h.adjoint().eval();
  return HermitianOperator(h);
}

double throttle_of(const Matrix& control) {
  // 2 tr(K^2) = 2 ||K||_F^2 for Hermitian K.
  return 2.0 * control.squaredNorm();
}

void check_throttle(double t, const Matrix& control) {
  const double throttle = throttle_of(control);
  if (throttle > 1.0 + kThrottleSlack) {
    std::ostringstream msg;
    msg << "schedule exceeds the admissible throttle at t = " << t
        << ": 2 tr(H1^2) = " << throttle;
    throw InadmissibleScheduleError(msg.str());
  }
}

}  // namespace

HermitianOperator random_horizontal_control(const PureState& psi,
                                            std::uint64_t seed) {
  GaussianStream rng(seed);
  return sample_horizontal(psi, rng);
}

std::optional<double> first_arrival_time(const ControlSchedule& schedule,
                                         const NavigationProblem& p,
                                         double fid_threshold, double dt) {
  const Vector& target = p.psi_f.vector();
  std::optional<double> arrival;
  propagate_observe(
      p.h0, schedule, p.psi_i, p.t_max, dt,
      [&](std::size_t, double t, const Vector& psi) {
        if (std::abs(target.dot(psi)) >= fid_threshold) {
          arrival = t;
          return false;
        }
        return true;
      },
      check_throttle);
  return arrival;
}

OptimalityReport optimality_certificate(const NavigationProblem& p,
                                        std::size_t n_samples, double dt,
                                        double fid_threshold,
                                        std::uint64_t seed) {
  OptimalityReport report;
  report.dt = dt;
  report.n_samples = n_samples;
  report.seed = seed;
  report.fid_threshold = fid_threshold;

  const NavigationSolution sol = solve(p);
  report.t_star = sol.t_star;
  report.trivial = sol.diagnostics.trivial;
  report.horizon = sol.t_star + 10.0 * dt;

  if (report.trivial) {
    // Start and target coincide projectively: every competitor ties at
    // t = 0, so the race carries no information.
    report.solver_arrived = true;
    report.solver_arrival = 0.0;
    report.pass = true;
    return report;
  }

  NavigationProblem race = p;
  race.t_max = report.horizon;

  const auto note_arrival = [&report](std::optional<double> arrival,
                                      double& family_min) {
    if (!arrival) {
      return;
    }
    ++report.n_arrived;
    if (family_min < 0.0 || *arrival < family_min) {
      family_min = *arrival;
    }
    if (report.min_competitor_arrival < 0.0 ||
        *arrival < report.min_competitor_arrival) {
      report.min_competitor_arrival = *arrival;
    }
  };

  GaussianStream rng(seed);

  // Family 1: controls frozen in the co-rotating frame, i.e. the same
  // functional form as the optimal one but aimed at a random horizontal
  // direction.
  for (std::size_t i = 0; i < n_samples; ++i) {
    const HermitianOperator k = sample_horizontal(p.psi_i, rng);
    const ControlSchedule schedule = ControlSchedule::adjoint_orbit(p.h0, k);
    note_arrival(first_arrival_time(schedule, race, fid_threshold, dt),
                 report.orbit_min_arrival);
  }

  // Family 2: four piecewise-constant segments, each one a fresh
  // horizontal unit-throttle control at the state where the segment
  // starts. Built incrementally because later segments depend on the
  // evolution so far.
  const Vector& target = p.psi_f.vector();
  const std::size_t steps = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(report.horizon / dt - 1e-12)));
  const double step = report.horizon / static_cast<double>(steps);
  for (std::size_t i = 0; i < n_samples; ++i) {
    Vector psi = p.psi_i.vector();
    std::optional<double> arrival;
    if (std::abs(target.dot(psi)) >= fid_threshold) {
      arrival = 0.0;
    }
    Matrix step_unitary;
    for (std::size_t k = 0; k < steps && !arrival; ++k) {
      if (k % ((steps + 3) / 4) == 0) {
        const HermitianOperator segment =
            sample_horizontal(PureState::normalized(psi), rng);
        check_throttle(static_cast<double>(k) * step, segment.matrix());
        step_unitary =
            detail::expm_matrix(p.h0.matrix() + segment.matrix(), step);
      }
      psi = step_unitary * psi;
      psi /= psi.norm();
      if (std::abs(target.dot(psi)) >= fid_threshold) {
        arrival = static_cast<double>(k + 1) * step;
      }
    }
    note_arrival(arrival, report.piecewise_min_arrival);
  }

  // The solver's own schedule must arrive (within integrator error).
  const ControlSchedule optimal =
      ControlSchedule::adjoint_orbit(p.h0, sol.h1_initial);
  const std::optional<double> solver_arrival =
      first_arrival_time(optimal, race, fid_threshold, dt);
  report.solver_arrived = solver_arrival.has_value();
  report.solver_arrival = solver_arrival.value_or(-1.0);

  report.pass = report.solver_arrived &&
                (report.min_competitor_arrival < 0.0 ||
                 report.min_competitor_arrival >= report.t_star - 5.0 * dt);
  return report;
}

}  // namespace qznav
