// Copyright 2026 The vncert Authors
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

#include "vncert/discrimination.hpp"
#include "vncert/haar.hpp"
#include "vncert/protocol.hpp"

namespace {

using namespace vncert;

void BM_HaarUnitary(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RngStream rng(1, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_haar_unitary(d, rng));
    }
}
BENCHMARK(BM_HaarUnitary)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_DiamondBoundsBlocks(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const ChoiMatrix j = choi_difference_J(d).value;
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_bounds(j, DiamondMethod::output_blocks));
    }
}
BENCHMARK(BM_DiamondBoundsBlocks)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_DiamondBoundsDense(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const ChoiMatrix j = choi_difference_J(d).value;
    for (auto _ : state) {
        benchmark::DoNotOptimize(diamond_bounds(j, DiamondMethod::dense));
    }
}
BENCHMARK(BM_DiamondBoundsDense)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TrialBothUnknown(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    RngStream rng(2, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial_both_unknown(d, Hypothesis::h1, rng));
    }
}
BENCHMARK(BM_TrialBothUnknown)->Arg(2)->Arg(5)->Arg(8);

void BM_TrialOneFixed(benchmark::State &state) {
    const int d = static_cast<int>(state.range(0));
    const Unitary fixed = Unitary::identity(d);
    RngStream rng(3, 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trial_one_fixed(d, fixed, Hypothesis::h1, rng));
    }
}
BENCHMARK(BM_TrialOneFixed)->Arg(2)->Arg(5)->Arg(8);

void BM_Simulate(benchmark::State &state) {
    ScenarioConfig config;
    config.d = 3;
    config.trials = state.range(0);
    config.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate(config));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
