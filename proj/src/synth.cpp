// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/synth.hpp"

#include <cmath>
#include <numbers>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

void check_spec(const SinusoidSpec& spec) {
    if (spec.sample_rate <= 0) throw InvalidArgument("sinusoid: sample rate must be positive");
    if (!(spec.f0_hz > 0.0) || spec.f0_hz >= spec.sample_rate / 2.0)
        throw InvalidArgument("sinusoid: f0 must satisfy 0 < f0 < fs/2");
    if (spec.amplitude < 0.0) throw InvalidArgument("sinusoid: amplitude must be >= 0");
    if (spec.duration == 0) throw InvalidArgument("sinusoid: duration must be >= 1 sample");
}

}  // namespace

AudioBuffer synth_sinusoid(const SinusoidSpec& spec) {
    check_spec(spec);

    // Integer samples-per-period: reduce the index so equal positions in the
    // period produce bitwise-equal samples.
    const double period = spec.sample_rate / spec.f0_hz;
    const double rounded = std::round(period);
    const bool integer_period = std::abs(period - rounded) < 1e-9 * period;
    const std::size_t period_samples = integer_period ? static_cast<std::size_t>(rounded) : 0;

    AudioBuffer out;
    out.sample_rate = spec.sample_rate;
    out.samples.resize(spec.duration);
    const double w = 2.0 * std::numbers::pi * spec.f0_hz / spec.sample_rate;
    for (std::size_t n = 0; n < spec.duration; ++n) {
        const std::size_t idx = integer_period ? n % period_samples : n;
        out.samples[n] = spec.amplitude * std::sin(w * static_cast<double>(idx) + spec.phase);
    }
    return out;
}

std::pair<AudioBuffer, std::size_t> splice_concat(const AudioBuffer& x1, const AudioBuffer& x2) {
    if (x1.sample_rate != x2.sample_rate)
        throw InvalidArgument("splice_concat: sample rates differ (" +
                              std::to_string(x1.sample_rate) + " vs " +
                              std::to_string(x2.sample_rate) + ")");
    AudioBuffer out;
    out.sample_rate = x1.sample_rate;
    out.samples.reserve(x1.size() + x2.size());
    out.samples.insert(out.samples.end(), x1.samples.begin(), x1.samples.end());
    out.samples.insert(out.samples.end(), x2.samples.begin(), x2.samples.end());
    return {std::move(out), x1.size()};
}

double continuation_phase(const SinusoidSpec& first) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double cycles = first.f0_hz * static_cast<double>(first.duration) / first.sample_rate;
    return std::fmod(two_pi * cycles, two_pi) + first.phase;
}

ConcatSpec make_scenario(const SinusoidSpec& first, ConcatScenario scenario,
                         double phase_offset, double amplitude2, std::size_t duration2) {
    ConcatSpec spec;
    spec.first = first;
    spec.scenario = scenario;
    spec.second = first;
    spec.second.duration = duration2 != 0 ? duration2 : first.duration;
    spec.second.phase = continuation_phase(first);
    switch (scenario) {
        case ConcatScenario::identical:
            break;
        case ConcatScenario::phase_shift:
            spec.second.phase += phase_offset;
            break;
        case ConcatScenario::amplitude_change:
            spec.second.amplitude = amplitude2;
            break;
    }
    return spec;
}

DemoResult demo_scenario(const ConcatSpec& spec, const AnalysisParams& analysis) {
    if (spec.first.sample_rate != spec.second.sample_rate)
        throw InvalidArgument("demo_scenario: segments must share a sample rate");

    DemoResult res;
    if (spec.scenario == ConcatScenario::identical) {
        // Split one continuous synthesis so the joint is exact.
        SinusoidSpec full = spec.first;
        full.duration = spec.first.duration + spec.second.duration;
        AudioBuffer whole = synth_sinusoid(full);
        AudioBuffer x1, x2;
        x1.sample_rate = x2.sample_rate = whole.sample_rate;
        x1.samples.assign(whole.samples.begin(),
                          whole.samples.begin() + static_cast<std::ptrdiff_t>(spec.first.duration));
        x2.samples.assign(whole.samples.begin() + static_cast<std::ptrdiff_t>(spec.first.duration),
                          whole.samples.end());
        auto [joined, point] = splice_concat(x1, x2);
        res.signal = std::move(joined);
        res.splice_point = point;
    } else {
        auto [joined, point] = splice_concat(synth_sinusoid(spec.first), synth_sinusoid(spec.second));
        res.signal = std::move(joined);
        res.splice_point = point;
    }
    res.spectrogram = stft_db(res.signal, make_window(analysis.window, analysis.win_len),
                              analysis.hop, analysis.floor_db);
    return res;
}

}  // namespace splicelab
