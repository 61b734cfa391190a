// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "splicelab/errors.hpp"
#include "splicelab/synth.hpp"
#include "splicelab/vad.hpp"

using namespace splicelab;

namespace {

AudioBuffer tone(std::size_t n) {
    SinusoidSpec s;
    s.f0_hz = 440.0;
    s.amplitude = 0.5;
    s.duration = n;
    return synth_sinusoid(s);
}

AudioBuffer tone_gap_tone(std::size_t n_tone, std::size_t n_gap) {
    const auto t = tone(n_tone);
    AudioBuffer x;
    x.samples = t.samples;
    x.samples.insert(x.samples.end(), n_gap, 0.0);
    x.samples.insert(x.samples.end(), t.samples.begin(), t.samples.end());
    return x;
}

}  // namespace

TEST_CASE("200 ms of zeros between two 1 s tones is found within one hop") {
    const auto x = tone_gap_tone(16000, 3200);
    const auto region = find_longest_silence(x, VadConfig{});
    CHECK(std::abs(static_cast<long>(region.start) - 16000L) <= 160);
    CHECK(std::abs(static_cast<long>(region.end) - 19200L) <= 160);
}

TEST_CASE("all-zero track has no interior silence") {
    AudioBuffer x;
    x.samples.assign(16000, 0.0);
    CHECK_THROWS_AS(find_longest_silence(x, VadConfig{}), NoSilenceError);
}

TEST_CASE("leading silence does not qualify") {
    AudioBuffer x;
    x.samples.assign(4000, 0.0);
    const auto t = tone(16000);
    x.samples.insert(x.samples.end(), t.samples.begin(), t.samples.end());
    CHECK_THROWS_AS(find_longest_silence(x, VadConfig{}), NoSilenceError);
}

TEST_CASE("trailing silence does not qualify") {
    auto x = tone(16000);
    x.samples.insert(x.samples.end(), 4000, 0.0);
    CHECK_THROWS_AS(find_longest_silence(x, VadConfig{}), NoSilenceError);
}

TEST_CASE("the longest of several interior gaps wins") {
    const auto t = tone(8000);
    AudioBuffer x;
    x.samples = t.samples;
    x.samples.insert(x.samples.end(), 1600, 0.0);  // 100 ms
    x.samples.insert(x.samples.end(), t.samples.begin(), t.samples.end());
    x.samples.insert(x.samples.end(), 4800, 0.0);  // 300 ms
    x.samples.insert(x.samples.end(), t.samples.begin(), t.samples.end());
    const auto region = find_longest_silence(x, VadConfig{});
    CHECK(region.start >= 8000 + 1600 + 8000 - 160);
    CHECK(region.length() >= 4800 - 320);
    CHECK(region.length() <= 4800 + 320);
}

TEST_CASE("gaps below min_region are ignored") {
    const auto x = tone_gap_tone(16000, 640);  // 40 ms < 60 ms default
    CHECK_THROWS_AS(find_longest_silence(x, VadConfig{}), NoSilenceError);
}

TEST_CASE("region boundaries sit on the hop grid") {
    const auto x = tone_gap_tone(16123, 3200);
    const auto region = find_longest_silence(x, VadConfig{});
    CHECK(region.start % 160 == 0);
    CHECK((region.end - 320) % 160 == 0);  // end = last_frame*hop + frame_len
}

TEST_CASE("track shorter than one frame is rejected") {
    AudioBuffer x;
    x.samples.assign(100, 0.1);
    CHECK_THROWS_AS(find_longest_silence(x, VadConfig{}), TooShortError);
}

TEST_CASE("threshold is relative to track RMS") {
    // Quiet hum in the gap: silent at the default -40 dB relative threshold
    // only because the rest of the track is loud.
    auto x = tone_gap_tone(16000, 3200);
    for (std::size_t i = 16000; i < 19200; ++i) x.samples[i] = 1e-4 * ((i % 2) ? 1.0 : -1.0);
    const auto region = find_longest_silence(x, VadConfig{});
    CHECK(region.length() >= 2560);
}
