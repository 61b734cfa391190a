// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <utility>

#include "splicelab/audio.hpp"
#include "splicelab/stft.hpp"
#include "splicelab/window.hpp"

namespace splicelab {

struct SinusoidSpec {
    double f0_hz = 800.0;
    double amplitude = 1.0;
    double phase = 0.0;       // radians
    std::size_t duration = 0;  // samples
    int sample_rate = 16000;
};

/// samples[n] = amplitude * sin(2 pi f0 n / fs + phase).
/// When fs/f0 is an integer number of samples the phase argument is reduced
/// modulo the period index, so the output is bitwise periodic.
AudioBuffer synth_sinusoid(const SinusoidSpec& spec);

/// Hard concatenation [x1, x2]. Returns the signal and the 0-based index of
/// the first sample of x2 (the paper-style 1-based splicing point is
/// splice_point + 1).
std::pair<AudioBuffer, std::size_t> splice_concat(const AudioBuffer& x1, const AudioBuffer& x2);

enum class ConcatScenario {
    identical,        // second segment continues the first seamlessly
    phase_shift,      // same frequency/amplitude, phase offset at the joint
    amplitude_change  // phase-continuous, different amplitude
};

struct ConcatSpec {
    SinusoidSpec first;
    SinusoidSpec second;
    ConcatScenario scenario = ConcatScenario::identical;
};

/// Phase that continues `first` seamlessly at sample index first.duration.
double continuation_phase(const SinusoidSpec& first);

/// Builds the second segment spec for a scenario. phase_offset applies to
/// phase_shift; amplitude2 applies to amplitude_change. duration2 = 0 means
/// "same as first".
ConcatSpec make_scenario(const SinusoidSpec& first, ConcatScenario scenario,
                         double phase_offset = 3.14159265358979323846,
                         double amplitude2 = 0.5, std::size_t duration2 = 0);

struct DemoResult {
    AudioBuffer signal;
    std::size_t splice_point = 0;  // 0-based first sample of the second segment
    Spectrogram spectrogram;
};

struct AnalysisParams {
    WindowKind window = WindowKind::rectangular;
    std::size_t win_len = 80;
    std::size_t hop = 40;
    double floor_db = kDefaultFloorDb;
};

/// Synthesizes the scenario and attaches its dB spectrogram. The identical
/// scenario is produced by splitting one continuous synthesis, so it is
/// bitwise equal to the unspliced sinusoid.
DemoResult demo_scenario(const ConcatSpec& spec, const AnalysisParams& analysis);

}  // namespace splicelab
