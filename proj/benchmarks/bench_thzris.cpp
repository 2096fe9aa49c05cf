// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The thzris Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "thzris/beamforming.hpp"
#include "thzris/channel.hpp"
#include "thzris/figures.hpp"
#include "thzris/ris.hpp"
#include "thzris/scenario.hpp"

using namespace thzris;

static void BM_ArrayFactorSweep(benchmark::State& state)
{
    const SystemConfig cfg;
    const auto dirs = direction_grid(static_cast<std::size_t>(state.range(0)));
    const auto bf = make_beamformer(PhysicalDirection1D(0.5), cfg, Architecture::tp_paper_literal);
    const CVector w = tp_response(bf, 313.5e9, cfg).col(0);
    for (auto _ : state) benchmark::DoNotOptimize(array_factor_sweep(dirs, 313.5e9, w, cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ArrayFactorSweep)->Arg(1024)->Arg(4096);

static void BM_TpResponse(benchmark::State& state)
{
    const SystemConfig cfg = SystemConfig().with_k_t(static_cast<std::size_t>(state.range(0)));
    const auto bf = make_beamformer(PhysicalDirection1D(0.5), cfg, Architecture::tp_paper_literal);
    for (auto _ : state) benchmark::DoNotOptimize(tp_response(bf, 310e9, cfg));
}
BENCHMARK(BM_TpResponse)->Arg(16)->Arg(256);

static void BM_Fig3aFull(benchmark::State& state)
{
    Scenario s = reference_scenario();
    s.sweep.selection = SubcarrierSelection::all;
    for (auto _ : state) benchmark::DoNotOptimize(run_fig3a(s));
}
BENCHMARK(BM_Fig3aFull)->Unit(benchmark::kMillisecond);

static void BM_RisDesign(benchmark::State& state)
{
    const Scenario s = reference_scenario();
    for (auto _ : state) benchmark::DoNotOptimize(ris_exact_solution(s.channels, 0, s.config));
}
BENCHMARK(BM_RisDesign);

static void BM_Fig4(benchmark::State& state)
{
    const Scenario s = reference_scenario();
    for (auto _ : state) benchmark::DoNotOptimize(run_fig4(s));
}
BENCHMARK(BM_Fig4)->Unit(benchmark::kMillisecond);

static void BM_ReceivedSignal(benchmark::State& state)
{
    const Scenario s = reference_scenario();
    const auto bf = make_beamformer(s.bs_target(), s.config, s.architecture);
    const auto design = ris_exact_solution(s.channels, 0, s.config);
    const CMatrix d = default_digital_precoder(s.config);
    const CVector sym = CVector::Ones(1);
    NoiseSource noise(NoiseModel{});
    for (auto _ : state)
        benchmark::DoNotOptimize(received_signal(s.config, s.channels, design.response, bf, d, sym, 305e9, noise));
}
BENCHMARK(BM_ReceivedSignal);

BENCHMARK_MAIN();
