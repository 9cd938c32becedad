// SPDX-License-Identifier: Apache-2.0
//
// remcr: cognitive radio interference under imperfect radio environment maps
// Copyright (C) 2026 The remcr authors
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
// ------------------------------------------------------------------------

#include "remcr/fadingsim.hpp"
#include "remcr/trials.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace
{
    const remcr::TrialContext &context()
    {
        static const remcr::TrialContext ctx = [] {
            remcr::ScenarioConfig cfg;
            cfg.delta_grid = 25.0;
            return remcr::TrialContext::make(cfg);
        }();
        return ctx;
    }

    const std::vector<double> &profile()
    {
        static const std::vector<double> w = [] {
            const auto outcomes = remcr::serial::run_trials(context(), 1, 1);
            return outcomes.front().profile.weights;
        }();
        return w;
    }

    const std::vector<double> kThresholds = [] {
        std::vector<double> t;
        for (double x = 0.05; x < 2.0; x += 0.01)
            t.push_back(x);
        return t;
    }();

    void BM_TrialsSerial(benchmark::State &state)
    {
        const auto n = static_cast<std::size_t>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(remcr::serial::degradations(context(), 1, n));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    void BM_TrialsParallel(benchmark::State &state)
    {
        const auto n = static_cast<std::size_t>(state.range(0));
        for (auto _ : state)
            benchmark::DoNotOptimize(remcr::parallel::degradations(context(), 1, n));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    remcr::FadingOptions fading_options(benchmark::State &state)
    {
        remcr::FadingOptions o;
        o.runs = static_cast<std::size_t>(state.range(0));
        o.run_periods = 200.0;
        return o;
    }

    void BM_CrossingsSerial(benchmark::State &state)
    {
        const auto o = fading_options(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(
                remcr::serial::simulate_crossings(profile(), 0.0, 25.0, kThresholds, o, 1, "bench"));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }

    void BM_CrossingsParallel(benchmark::State &state)
    {
        const auto o = fading_options(state);
        for (auto _ : state)
            benchmark::DoNotOptimize(
                remcr::parallel::simulate_crossings(profile(), 0.0, 25.0, kThresholds, o, 1, "bench"));
        state.SetItemsProcessed(state.iterations() * state.range(0));
    }
}

BENCHMARK(BM_TrialsSerial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TrialsParallel)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingsSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CrossingsParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
