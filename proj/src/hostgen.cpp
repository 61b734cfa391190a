// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/hostgen.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <vector>

#include "splicelab/errors.hpp"
#include "splicelab/iir.hpp"
#include "splicelab/rng.hpp"
#include "splicelab/wav.hpp"

namespace splicelab {

namespace {

void normalize_rms(std::vector<double>& v, double target) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    const double rms = std::sqrt(acc / static_cast<double>(v.size()));
    if (rms <= 0.0) return;
    const double g = target / rms;
    for (double& x : v) x *= g;
}

}  // namespace

AudioBuffer make_host(std::uint64_t seed, const HostParams& p) {
    const int fs = p.sample_rate;
    const std::size_t n = static_cast<std::size_t>(p.duration_s * fs);
    if (n == 0) throw InvalidArgument("make_host: zero duration");

    Rng rng(seed);
    const double two_pi = 2.0 * std::numbers::pi;

    // Harmonic stack, amplitudes 1/h.
    const double f0 = rng.uniform(p.f0_min_hz, p.f0_max_hz);
    std::vector<double> voiced(n, 0.0);
    for (int h = 1; h <= p.harmonics; ++h) {
        const double phase = rng.uniform(0.0, two_pi);
        const double w = two_pi * h * f0 / fs;
        const double amp = 1.0 / h;
        for (std::size_t i = 0; i < n; ++i)
            voiced[i] += amp * std::sin(w * static_cast<double>(i) + phase);
    }
    normalize_rms(voiced, p.speech_rms);

    // Speech-shaped noise, kept away from the low band.
    AudioBuffer noise;
    noise.sample_rate = fs;
    noise.samples.resize(n);
    for (double& v : noise.samples) v = rng.gaussian();
    noise = apply_filter(design_butterworth(FilterKind::highpass, 4, 400.0, fs), noise);
    normalize_rms(noise.samples, p.speech_noise_rms);

    const double am_phase = rng.uniform(0.0, two_pi);
    std::vector<double> speech(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double am =
            1.0 + p.am_depth * std::sin(two_pi * p.am_rate_hz * static_cast<double>(i) / fs + am_phase);
        speech[i] = (voiced[i] + noise.samples[i]) * am;
    }

    // Interior pause with raised-cosine edges.
    const std::size_t g0 = static_cast<std::size_t>(p.gap_start_s * fs);
    const std::size_t g1 = static_cast<std::size_t>(p.gap_end_s * fs);
    const std::size_t ramp = static_cast<std::size_t>(p.gap_ramp_s * fs);
    if (!(g0 > ramp && g1 > g0 && g1 + ramp < n))
        throw InvalidArgument("make_host: gap does not fit inside the track");
    for (std::size_t i = g0; i < g1; ++i) speech[i] = 0.0;
    for (std::size_t j = 0; j < ramp; ++j) {
        const double fade = 0.5 * (1.0 + std::cos(std::numbers::pi * static_cast<double>(j) / ramp));
        speech[g0 - ramp + j] *= fade;        // 1 -> 0 into the gap
        speech[g1 + j] *= 1.0 - fade;         // 0 -> 1 out of it
    }

    // Room tone across the whole track; high-passed so the detector band
    // stays near the quantization floor.
    AudioBuffer room;
    room.sample_rate = fs;
    room.samples.resize(n);
    for (double& v : room.samples) v = rng.gaussian();
    room = apply_filter(design_butterworth(FilterKind::highpass, 4, p.room_tone_cutoff_hz, fs), room);
    normalize_rms(room.samples, p.room_tone_rms);

    AudioBuffer out;
    out.sample_rate = fs;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.samples[i] = speech[i] + room.samples[i];
    return out;
}

void write_host_corpus(const std::filesystem::path& dir, std::size_t count, std::uint64_t seed,
                       const HostParams& params) {
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < count; ++i) {
        const AudioBuffer host = make_host(derive_seed(seed, i), params);
        char name[32];
        std::snprintf(name, sizeof(name), "host_%05zu.wav", i);
        write_wav(dir / name, host, WavFormat{WavFormat::Encoding::pcm16, 0});
    }
}

}  // namespace splicelab
