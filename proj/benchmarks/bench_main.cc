// Copyright 2026 The drbench Authors
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

#include <cmath>
#include <vector>

#include "drbench/analysis.h"
#include "drbench/clifford.h"
#include "drbench/compilation.h"
#include "drbench/error_model.h"
#include "drbench/protocols.h"
#include "drbench/random.h"
#include "drbench/sampling.h"
#include "drbench/simulator.h"

namespace {

using namespace drbench;

void BM_Compose(benchmark::State &state) {
    size_t n = state.range(0);
    Rng rng(1);
    CliffordOp a = sample_clifford_uniform(n, rng);
    CliffordOp b = sample_clifford_uniform(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_Compose)->Arg(2)->Arg(8)->Arg(32)->Arg(64);

void BM_SampleClifford(benchmark::State &state) {
    Rng rng(2);
    for (auto _ : state) benchmark::DoNotOptimize(sample_clifford_uniform(state.range(0), rng));
}
BENCHMARK(BM_SampleClifford)->Arg(2)->Arg(8)->Arg(32);

void BM_SampleLayer(benchmark::State &state) {
    int n = state.range(0);
    DeviceSpec device = DeviceSpec::all_to_all(n);
    SamplerSpec spec = SamplerSpec::pairing(0.5);
    Rng rng(3);
    for (auto _ : state) benchmark::DoNotOptimize(sample_layer(spec, device, rng));
}
BENCHMARK(BM_SampleLayer)->Arg(4)->Arg(16)->Arg(64);

void BM_CompileClifford(benchmark::State &state) {
    int n = state.range(0);
    DeviceSpec device = DeviceSpec::ring(n);
    Rng rng(4);
    CliffordOp c = sample_clifford_uniform(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(compile_clifford(c, device));
}
BENCHMARK(BM_CompileClifford)->Arg(4)->Arg(8)->Arg(16);

ExperimentDesign drb_design(int n) {
    ExperimentDesign d;
    d.device = DeviceSpec::all_to_all(n);
    d.sampler = SamplerSpec::pairing(0.5);
    d.lengths = {50};
    d.circuits_per_length = 1;
    d.shots = 1000;
    d.seed = 5;
    return d;
}

void BM_GenerateDrbCircuit(benchmark::State &state) {
    ExperimentDesign d = drb_design(state.range(0));
    Rng rng(6);
    for (auto _ : state) benchmark::DoNotOptimize(generate_drb_circuit(d, 50, rng));
}
BENCHMARK(BM_GenerateDrbCircuit)->Arg(4)->Arg(8)->Arg(16);

void BM_SimulateCircuit(benchmark::State &state) {
    int n = state.range(0);
    ExperimentDesign d = drb_design(n);
    Rng rng(7);
    Circuit c = generate_drb_circuit(d, 50, rng);
    ErrorModel model = build_model_main_sim(n);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_circuit(c, model, 1000, rng, false));
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_SimulateCircuit)->Arg(4)->Arg(8)->Arg(16);

void BM_FitDecay(benchmark::State &state) {
    std::vector<DecayPoint> points;
    for (int m = 0; m <= 100; m += 10) points.push_back({m, 0.25 + 0.7 * std::pow(0.97, m), 1e4});
    for (auto _ : state) benchmark::DoNotOptimize(fit_decay(points, 2));
}
BENCHMARK(BM_FitDecay);

}  // namespace

BENCHMARK_MAIN();
