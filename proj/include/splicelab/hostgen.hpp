// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>

#include "splicelab/audio.hpp"

namespace splicelab {

/// Synthetic speech-like host tracks for desk-scale experiments: a harmonic
/// stack with mild amplitude modulation plus high-passed noise, an interior
/// pause with smooth edges (the VAD anchor), and a low-level room tone that
/// supplies the crossfade with material while the band below ~100 Hz stays
/// quiet. Written as 16-bit WAV, the quantization floor plays the role of a
/// recording chain's noise floor.
struct HostParams {
    int sample_rate = 16000;
    double duration_s = 4.0;
    double f0_min_hz = 250.0;  // harmonic fundamental range
    double f0_max_hz = 350.0;
    int harmonics = 6;
    double speech_rms = 0.10;
    double speech_noise_rms = 0.04;    // high-passed at 400 Hz
    double am_depth = 0.2;             // syllabic amplitude modulation
    double am_rate_hz = 2.7;
    double gap_start_s = 1.7;          // interior pause (silence region)
    double gap_end_s = 2.1;
    double gap_ramp_s = 0.080;
    double room_tone_rms = 0.005;      // high-passed at 120 Hz
    double room_tone_cutoff_hz = 120.0;
};

/// Deterministic host synthesis; float output in [-1, 1] before quantization.
AudioBuffer make_host(std::uint64_t seed, const HostParams& params = {});

/// Writes count hosts as host_00000.wav ... under dir (pcm16).
void write_host_corpus(const std::filesystem::path& dir, std::size_t count, std::uint64_t seed,
                       const HostParams& params = {});

}  // namespace splicelab
