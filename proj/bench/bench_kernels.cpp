// Copyright 2026 The dissim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <omp.h>

#include <random>
#include <vector>

#include "dissim/experiments.hpp"
#include "dissim/simulate.hpp"
#include "dissim/variance.hpp"

namespace dissim {
namespace {

BrickworkVarianceConfig bench_config() {
    BrickworkVarianceConfig cfg;
    cfg.layers = 20;
    cfg.reset_every = 5;
    return cfg;
}

SampleFn bench_sampler(int n) {
    auto cfg = bench_config();
    return [cfg, n](Rng &rng, int) { return brickwork_sample(cfg, n, rng); };
}

void BM_VarianceSerial(benchmark::State &state) {
    auto fn = bench_sampler(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_variance_serial(fn, 32, 1).variance);
    }
}
BENCHMARK(BM_VarianceSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_VarianceParallel(benchmark::State &state) {
    auto fn = bench_sampler(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(estimate_variance(fn, 32, 1).variance);
    }
    state.counters["threads"] = omp_get_max_threads();
}
BENCHMARK(BM_VarianceParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

CircuitProgram bench_circuit(int n) {
    AnsatzSpec a;
    a.gates = TwoQubitGates::kHardwareEfficient;
    Rng rng(3);
    return build_dissipative_circuit(place_reset_sites(n, n / 2, 1), 5, 4, 1.0, a, rng);
}

std::vector<double> bench_theta(const CircuitProgram &c) {
    Rng rng(4);
    std::uniform_real_distribution<double> u(0, 6.283185307179586);
    std::vector<double> theta(static_cast<size_t>(c.num_params));
    for (auto &t : theta) t = u(rng);
    return theta;
}

void BM_EvolveDense(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto c = bench_circuit(n);
    auto theta = bench_theta(c);
    auto rho0 = DensityState::zero(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(c, theta, rho0).trace());
    }
}
BENCHMARK(BM_EvolveDense)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_EvolveFactored(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    auto c = bench_circuit(n);
    auto theta = bench_theta(c);
    auto rho0 = FactoredState::zero(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate_factored(c, theta, rho0).trace());
    }
}
BENCHMARK(BM_EvolveFactored)->Arg(4)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace dissim

BENCHMARK_MAIN();
