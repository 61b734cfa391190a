// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "splicelab/errors.hpp"
#include "splicelab/forge.hpp"
#include "splicelab/rng.hpp"
#include "splicelab/stft.hpp"
#include "splicelab/synth.hpp"

using namespace splicelab;

namespace {

AudioBuffer constant(std::size_t n, double v) {
    AudioBuffer x;
    x.samples.assign(n, v);
    return x;
}

// Tone with an interior zero gap, the minimal VAD-forgeable host.
AudioBuffer gapped_tone(std::size_t n_tone, std::size_t n_gap, double f0 = 440.0) {
    SinusoidSpec s;
    s.f0_hz = f0;
    s.amplitude = 0.5;
    s.duration = n_tone;
    const auto t = synth_sinusoid(s);
    AudioBuffer x;
    x.samples = t.samples;
    x.samples.insert(x.samples.end(), n_gap, 0.0);
    x.samples.insert(x.samples.end(), t.samples.begin(), t.samples.end());
    return x;
}

// Energy at least `margin` bins away from the carrier: the broadband streak,
// not the near-carrier AM sidebands.
double far_band_energy(const Spectrogram& spec, std::size_t m, std::size_t f0_bin,
                       std::size_t margin) {
    double e = 0.0;
    for (std::size_t k = 0; k < spec.num_bins; ++k) {
        if (k + margin >= f0_bin && k <= f0_bin + margin) continue;
        const double mag = std::pow(10.0, spec.at(k, m) / 20.0);
        e += mag * mag;
    }
    return e;
}

}  // namespace

TEST_CASE("crossfading constant segments is the identity in the overlap") {
    const auto out = ola_crossfade(constant(4000, 0.5), constant(6000, 0.5), 512);
    REQUIRE(out.size() == 4000 + 6000 - 256);
    for (double v : out.samples) CHECK(v == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("crossfade output length is len1 + len2 - W/2") {
    CHECK(ola_crossfade(constant(4000, 0.1), constant(6000, 0.1), 512).size() == 9744);
    CHECK(ola_crossfade(constant(300, 0.1), constant(300, 0.1), 256).size() == 472);
}

TEST_CASE("crossfade rejects segments shorter than half the window") {
    CHECK_THROWS_AS(ola_crossfade(constant(128, 0.1), constant(4000, 0.1), 256), TooShortError);
    CHECK_THROWS_AS(ola_crossfade(constant(4000, 0.1), constant(100, 0.1), 256), TooShortError);
}

TEST_CASE("longer OLA windows monotonically reduce splice-frame leakage") {
    // Phase-flipped sinusoid halves joined with growing crossfades. Analysis
    // window 4000 puts the 800 Hz carrier exactly on bin 200, so the leakage
    // splash more than 25 bins (~100 Hz) away is the artifact alone; that
    // splash must not grow as the crossfade lengthens.
    SinusoidSpec s;
    s.f0_hz = 800.0;
    s.amplitude = 0.8;
    s.duration = 32000;
    const auto a = synth_sinusoid(s);
    s.phase = std::numbers::pi;
    const auto b = synth_sinusoid(s);

    const std::size_t len = 4000, hop = 1000;
    double prev = std::numeric_limits<double>::infinity();
    for (std::size_t w : {256u, 512u, 1024u, 2048u, 4096u}) {
        const auto joined = ola_crossfade(a, b, w);
        const auto spec = stft_db(joined, make_window(WindowKind::hann_periodic, len), hop);
        const std::size_t overlap_start = a.size() - w / 2;
        const std::size_t overlap_end = a.size();
        double worst = 0.0;
        for (std::size_t m = 0; m < spec.num_frames; ++m) {
            const std::size_t start = m * hop;
            if (start < overlap_end && start + len > overlap_start)
                worst = std::max(worst, far_band_energy(spec, m, 200, 25));
        }
        CHECK(worst <= prev * (1.0 + 1e-9));
        prev = worst;
    }
}

TEST_CASE("forge_splice anchors the cut at the silence regions") {
    const auto a = gapped_tone(16000, 3200, 440.0);
    const auto b = gapped_tone(12000, 4800, 620.0);
    const auto res = forge_splice(a, b, 512, VadConfig{}, /*seed=*/7,
                                  {"a.wav", "real"}, {"b.wav", "fake"});
    CHECK(res.record.ola_window == 512);
    CHECK(res.record.source_a.tagged() == "real:a.wav");
    CHECK(res.record.source_b.tagged() == "fake:b.wav");
    CHECK(res.record.rng_seed == 7);
    // Output combines a prefix of one host and a suffix of the other.
    const std::size_t total = a.size() + b.size();
    CHECK(res.audio.size() < total);
    CHECK(res.audio.size() > std::min(a.size(), b.size()));
    // The splice sample sits inside the overlap region of the output.
    CHECK(res.record.splice_sample < res.audio.size());
}

TEST_CASE("forge_splice is deterministic in the seed") {
    const auto a = gapped_tone(16000, 3200, 440.0);
    const auto b = gapped_tone(12000, 4800, 620.0);
    const auto r1 = forge_splice(a, b, 256, VadConfig{}, 42);
    const auto r2 = forge_splice(a, b, 256, VadConfig{}, 42);
    CHECK(r1.audio.samples == r2.audio.samples);
    CHECK(r1.record.splice_sample == r2.record.splice_sample);
}

TEST_CASE("the coin flip swaps which host leads") {
    const auto a = gapped_tone(16000, 3200, 440.0);
    const auto b = gapped_tone(12000, 4800, 620.0);
    // Find two seeds with opposite flips.
    bool saw_a_first = false, saw_b_first = false;
    for (std::uint64_t seed = 0; seed < 32 && !(saw_a_first && saw_b_first); ++seed) {
        const auto r = forge_splice(a, b, 256, VadConfig{}, seed);
        // Leading host identifiable by the first sample (440 Hz vs 620 Hz tone).
        if (r.audio.samples[1] == a.samples[1]) saw_a_first = true;
        else saw_b_first = true;
    }
    CHECK(saw_a_first);
    CHECK(saw_b_first);
}

TEST_CASE("forge_splice propagates the no-silence error") {
    const auto a = gapped_tone(16000, 3200);
    AudioBuffer no_gap;
    SinusoidSpec s;
    s.f0_hz = 500.0;
    s.duration = 32000;
    no_gap = synth_sinusoid(s);
    CHECK_THROWS_AS(forge_splice(a, no_gap, 256, VadConfig{}, 0), NoSilenceError);
}

TEST_CASE("noise injection hits the requested SNR") {
    AudioBuffer x;
    SinusoidSpec s;
    s.f0_hz = 1000.0;
    s.amplitude = std::numbers::sqrt2;  // RMS 1.0
    s.duration = 64000;
    x = synth_sinusoid(s);

    const auto y = inject_lowband_noise(x, NoiseSpec{60.0, 9});
    AudioBuffer added;
    added.samples.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) added.samples[i] = y.samples[i] - x.samples[i];
    CHECK(added.rms() == doctest::Approx(1e-3).epsilon(0.01));
}

TEST_CASE("injected noise stays below 80 Hz") {
    // Broadband host so every bin has signal energy; the spectrum above
    // 1 kHz must not move by more than 0.1 dB per bin at SNR 60.
    AudioBuffer x;
    x.samples.resize(64000);
    Rng rng(11);
    for (double& v : x.samples) v = 0.1 * rng.gaussian();

    const auto y = inject_lowband_noise(x, NoiseSpec{60.0, 10});
    const auto w = make_window(WindowKind::hann_periodic, 2048);
    const auto sx = stft_db(x, w, 512);
    const auto sy = stft_db(y, w, 512);
    const std::size_t k_1khz = static_cast<std::size_t>(1000.0 / sx.bin_hz) + 1;
    double worst = 0.0;
    for (std::size_t m = 0; m < sx.num_frames; ++m)
        for (std::size_t k = k_1khz; k < sx.num_bins; ++k)
            worst = std::max(worst, std::abs(sx.at(k, m) - sy.at(k, m)));
    CHECK(worst < 0.1);

    // At the hardest setting (SNR 40) nothing above 500 Hz moves by 0.5 dB.
    const auto y40 = inject_lowband_noise(x, NoiseSpec{40.0, 10});
    const auto sy40 = stft_db(y40, w, 512);
    const std::size_t k_500 = static_cast<std::size_t>(500.0 / sx.bin_hz) + 1;
    worst = 0.0;
    for (std::size_t m = 0; m < sx.num_frames; ++m)
        for (std::size_t k = k_500; k < sx.num_bins; ++k)
            worst = std::max(worst, std::abs(sx.at(k, m) - sy40.at(k, m)));
    CHECK(worst < 0.5);
}

TEST_CASE("same noise seed gives bitwise-identical output") {
    AudioBuffer x;
    x.samples.resize(8000);
    Rng rng(3);
    for (double& v : x.samples) v = 0.2 * rng.gaussian();
    const auto y1 = inject_lowband_noise(x, NoiseSpec{46.0, 77});
    const auto y2 = inject_lowband_noise(x, NoiseSpec{46.0, 77});
    CHECK(y1.samples == y2.samples);
}

TEST_CASE("noise injection on silence is rejected") {
    AudioBuffer x;
    x.samples.assign(1000, 0.0);
    CHECK_THROWS_AS(inject_lowband_noise(x, NoiseSpec{60.0, 0}), UndefinedSnrError);
}

TEST_CASE("highpass mitigation removes DC and keeps 1 kHz") {
    AudioBuffer dc;
    dc.samples.assign(32000, 0.5);
    const auto y = highpass_mitigate(dc);
    double tail = 0.0;
    for (std::size_t i = y.size() - 1000; i < y.size(); ++i) tail = std::max(tail, std::abs(y.samples[i]));
    CHECK(tail < 1e-6);

    SinusoidSpec s;
    s.f0_hz = 1000.0;
    s.duration = 64000;
    const auto x = synth_sinusoid(s);
    const auto z = highpass_mitigate(x);
    // Steady-state level change below 0.1 dB.
    double rms = 0.0;
    for (std::size_t i = z.size() / 2; i < z.size(); ++i) rms += z.samples[i] * z.samples[i];
    rms = std::sqrt(rms / (z.size() / 2.0));
    CHECK(std::abs(20.0 * std::log10(rms / std::sqrt(0.5))) < 0.1);

    // A 50 Hz tone drops by at least 45 dB.
    s.f0_hz = 50.0;
    const auto low = highpass_mitigate(synth_sinusoid(s));
    double rms_low = 0.0;
    for (std::size_t i = low.size() / 2; i < low.size(); ++i) rms_low += low.samples[i] * low.samples[i];
    rms_low = std::sqrt(rms_low / (low.size() / 2.0));
    CHECK(20.0 * std::log10(rms_low / std::sqrt(0.5)) < -45.0);
}
