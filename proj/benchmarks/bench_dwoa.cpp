/*
* Copyright (C) 2026 satsc contributors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "satsc/dwoa.hpp"
#include "satsc/greedy.hpp"
#include "satsc/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace satsc;

Scenario scenario_of(std::size_t gus)
{
    ScenarioConfig cfg;
    cfg.gus = gus;
    cfg.seed = 7;
    return build(cfg);
}

void BM_TwoStageDwoa(benchmark::State& state)
{
    const Scenario s = scenario_of(static_cast<std::size_t>(state.range(0)));
    WoaConfig wc;
    wc.rng_seed = 7;
    wc.max_it = static_cast<std::size_t>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(optimize_two_stage(s, QualityTable::builtin(), wc));
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(wc.max_it * wc.population_n));
}
BENCHMARK(BM_TwoStageDwoa)->Args({20, 50})->Args({20, 200})->Args({40, 200})->Unit(benchmark::kMillisecond);

void BM_Greedy(benchmark::State& state)
{
    const Scenario s = scenario_of(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(greedy_two_stage(s, QualityTable::builtin()));
}
BENCHMARK(BM_Greedy)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_ExactAssignment(benchmark::State& state)
{
    const Scenario s = scenario_of(static_cast<std::size_t>(state.range(0))).all_direct();
    const Assignment ctx = Assignment::unassigned(s);
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_linear_assignment(s, Stage::Satellite, QualityTable::builtin(), ctx));
}
BENCHMARK(BM_ExactAssignment)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

} // namespace

BENCHMARK_MAIN();
