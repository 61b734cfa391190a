// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0
//
// Compares the OpenMP STFT kernel against the serial reference, and times
// whole-track scoring. Run with --benchmark_time_unit=ms.

#include <benchmark/benchmark.h>

#include "splicelab/detector.hpp"
#include "splicelab/rng.hpp"
#include "splicelab/stft.hpp"
#include "splicelab/window.hpp"

namespace {

splicelab::AudioBuffer noise_track(std::size_t seconds) {
    splicelab::AudioBuffer x;
    x.sample_rate = 16000;
    x.samples.resize(seconds * 16000);
    splicelab::Rng rng(42);
    for (double& v : x.samples) v = 0.1 * rng.gaussian();
    return x;
}

void bm_stft_serial(benchmark::State& state) {
    const auto x = noise_track(static_cast<std::size_t>(state.range(0)));
    const auto w = splicelab::make_window(splicelab::WindowKind::hann_periodic, 4096);
    for (auto _ : state) {
        auto spec = splicelab::serial::stft_db(x, w, 1024);
        benchmark::DoNotOptimize(spec.values_db.data());
    }
}
BENCHMARK(bm_stft_serial)->Arg(4)->Arg(30);

void bm_stft_parallel(benchmark::State& state) {
    const auto x = noise_track(static_cast<std::size_t>(state.range(0)));
    const auto w = splicelab::make_window(splicelab::WindowKind::hann_periodic, 4096);
    for (auto _ : state) {
        auto spec = splicelab::stft_db(x, w, 1024);
        benchmark::DoNotOptimize(spec.values_db.data());
    }
}
BENCHMARK(bm_stft_parallel)->Arg(4)->Arg(30);

void bm_score_track(benchmark::State& state) {
    const auto x = noise_track(4);
    const auto cfg = splicelab::DetectorConfig::partialspoof();
    for (auto _ : state) {
        auto score = splicelab::score_track(x, cfg);
        benchmark::DoNotOptimize(score.d);
    }
}
BENCHMARK(bm_score_track);

}  // namespace

BENCHMARK_MAIN();
