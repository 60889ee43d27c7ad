// Copyright 2026 The cvmap Authors
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

#include "benchmark/benchmark.h"
#include "cvmap/bell.h"
#include "cvmap/bloch.h"
#include "cvmap/cv_states.h"
#include "cvmap/embedding.h"
#include "cvmap/su_algebra.h"

using namespace cvmap;

static void BM_build_generators(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_generators(n));
    }
}
BENCHMARK(BM_build_generators)->Arg(2)->Arg(4)->Arg(8);

static void BM_build_embedded(benchmark::State &state) {
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_embedded(N, 3));
    }
}
BENCHMARK(BM_build_embedded)->Arg(24)->Arg(128);

static void BM_lift_chsh(benchmark::State &state) {
    const int N = static_cast<int>(state.range(0));
    const EmbeddedGeneratorSet eg = build_embedded(N, 2);
    const BlochTensor op = chsh_operator(ChshSettings::textbook(), build_generators(2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lift_observable(op, eg));
    }
}
BENCHMARK(BM_lift_chsh)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_chsh_nopa(benchmark::State &state) {
    const FockKet ket = nopa(3.0, 128);
    for (auto _ : state) {
        benchmark::DoNotOptimize(chsh_cv_expectation(ket, ChshSettings::textbook(), 128));
    }
}
BENCHMARK(BM_chsh_nopa)->Unit(benchmark::kMillisecond);

static void BM_bell_curve(benchmark::State &state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bell_curve(0.0, 6.0, 601, jobs));
    }
}
BENCHMARK(BM_bell_curve)->Arg(1)->Arg(4);

static void BM_induced_qudit_state(benchmark::State &state) {
    const FockKet ket = nopa(1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(induced_qudit_state(ket, 3));
    }
}
BENCHMARK(BM_induced_qudit_state)->Arg(33)->Arg(66)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
