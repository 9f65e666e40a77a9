// SPDX-License-Identifier: Apache-2.0
//
// simo-sounder: SIMO indoor channel-sounder simulation and analysis
// Copyright (C) 2026 The simo-sounder Authors
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

#include <benchmark/benchmark.h>

#include <random>

#include "simo/analysis.hpp"
#include "simo/channel.hpp"
#include "simo/config.hpp"
#include "simo/report_io.hpp"
#include "simo/snapshot_io.hpp"
#include "simo/sounder.hpp"

using namespace simo;

namespace
{
    GainVector random_gains(std::uint64_t seed)
    {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> g(0.0, 1e-3);
        return GainVector({{g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}, {g(rng), g(rng)}});
    }

    std::vector<SnapshotRecord> default_records(ArrayKind kind)
    {
        return simulate(build_inputs(default_run_config(kind)), {1, false});
    }
}

static void BM_Capacity(benchmark::State &state)
{
    const auto h = random_gains(1);
    const auto rho = Snr::from_db(33.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(capacity(h, rho));
}
BENCHMARK(BM_Capacity);

static void BM_CapacityDetOracle(benchmark::State &state)
{
    const auto h = random_gains(1);
    const auto rho = Snr::from_db(33.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(capacity_det_oracle(h, rho));
}
BENCHMARK(BM_CapacityDetOracle);

static void BM_NormalizedCapacity(benchmark::State &state)
{
    const auto h = random_gains(2);
    const auto rho = Snr::from_db(33.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(normalized_capacity(h, rho));
}
BENCHMARK(BM_NormalizedCapacity);

static void BM_SynthesizeAndEstimate(benchmark::State &state)
{
    const auto h = random_gains(3);
    const SnapshotConfig cfg;
    const ReceiverChain chain;
    std::uint64_t k = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(estimate_gain(synthesize_iq(h, cfg, chain, {1, 1, k++}), cfg, chain));
}
BENCHMARK(BM_SynthesizeAndEstimate);

static void BM_Simulate(benchmark::State &state)
{
    const auto inputs = build_inputs(default_run_config(ArrayKind::ula));
    const SimulateOptions options{static_cast<unsigned>(state.range(0)), false};
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate(inputs, options));
}
BENCHMARK(BM_Simulate)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_FormatGainFile(benchmark::State &state)
{
    const auto file = make_gain_file(default_records(ArrayKind::ula), -8.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(format_gain_file(file));
}
BENCHMARK(BM_FormatGainFile)->Unit(benchmark::kMicrosecond);

static void BM_ParseGainFile(benchmark::State &state)
{
    const auto text = format_gain_file(make_gain_file(default_records(ArrayKind::ula), -8.0));
    for (auto _ : state)
        benchmark::DoNotOptimize(parse_gain_file(text));
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_ParseGainFile)->Unit(benchmark::kMicrosecond);

static void BM_AnalyzeAndReport(benchmark::State &state)
{
    const auto snaps = to_gain_snapshots(make_gain_file(default_records(ArrayKind::pi_shape), -8.0));
    AnalysisOptions options;
    options.capacity_ref_gain_db = -55.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(format_report(summarize(compute_metrics(snaps, options, "pi"))));
}
BENCHMARK(BM_AnalyzeAndReport)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
