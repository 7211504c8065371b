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

#include <benchmark/benchmark.h>

#include <cmath>
#include <complex>
#include <random>

#include "qznav/geometry.hpp"
#include "qznav/horizontality.hpp"
#include "qznav/linalg.hpp"
#include "qznav/propagator.hpp"
#include "qznav/solver.hpp"
#include "qznav/types.hpp"

namespace {

using qznav::Complex;
using qznav::HermitianOperator;
using qznav::Matrix;
using qznav::PureState;
using qznav::Vector;

HermitianOperator random_hermitian(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  Matrix a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      a(i, j) = Complex(dist(gen), dist(gen));
    }
  }
  return HermitianOperator((a + a.adjoint()) / 2.0);
}

PureState random_state(Eigen::Index n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist;
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = Complex(dist(gen), dist(gen));
  }
  return PureState::normalized(v);
}

void BM_ExpmUnitary(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HermitianOperator h = random_hermitian(n, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qznav::expm_unitary(h, 0.3));
  }
}
BENCHMARK(BM_ExpmUnitary)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_FlowApply(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const qznav::HamiltonianFlow flow(random_hermitian(n, 7));
  const Vector v = random_state(n, 11).vector();
  for (auto _ : state) {
    benchmark::DoNotOptimize(flow.apply(0.3, v));
  }
}
BENCHMARK(BM_FlowApply)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_HorizontalSplit(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  const HermitianOperator h = random_hermitian(n, 7);
  const PureState psi = random_state(n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qznav::split(h, psi));
  }
}
BENCHMARK(BM_HorizontalSplit)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_RandersTime(benchmark::State& state) {
  const qznav::TangentData data(0.49, 1.3, 0.31);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qznav::randers_time(data));
  }
}
BENCHMARK(BM_RandersTime);

void BM_Solve(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  HermitianOperator h0 = random_hermitian(n, 7);
  const double scale = qznav::spectral_norm(h0);
  h0 = HermitianOperator(h0.matrix() * (0.8 / scale));
  const qznav::NavigationProblem p{h0, random_state(n, 11),
                                   random_state(n, 13)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qznav::solve(p));
  }
}
BENCHMARK(BM_Solve)->Arg(2)->Arg(4)->Arg(8);

void BM_PropagateOrdered(benchmark::State& state) {
  const Eigen::Index n = state.range(0);
  HermitianOperator h0 = random_hermitian(n, 7);
  const double scale = qznav::spectral_norm(h0);
  h0 = HermitianOperator(h0.matrix() * (0.8 / scale));
  const qznav::NavigationProblem p{h0, random_state(n, 11),
                                   random_state(n, 13)};
  const qznav::NavigationSolution sol = qznav::solve(p);
  const qznav::ControlSchedule schedule =
      qznav::ControlSchedule::adjoint_orbit(p.h0, sol.h1_initial);
  for (auto _ : state) {
    benchmark::DoNotOptimize(qznav::propagate_ordered(
        p.h0, schedule, p.psi_i, sol.t_star, 1e-2));
  }
}
BENCHMARK(BM_PropagateOrdered)->Arg(2)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
