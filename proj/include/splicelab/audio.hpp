// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "splicelab/errors.hpp"

namespace splicelab {

/// Mono discrete-time signal. Samples are dimensionless amplitudes,
/// nominally in [-1, 1]; sample_rate in Hz.
struct AudioBuffer {
    std::vector<double> samples;
    int sample_rate = 16000;

    AudioBuffer() = default;
    AudioBuffer(std::vector<double> s, int rate) : samples(std::move(s)), sample_rate(rate) {}

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return static_cast<double>(samples.size()) / sample_rate; }

    double rms() const {
        if (samples.empty()) return 0.0;
        double acc = 0.0;
        for (double v : samples) acc += v * v;
        return std::sqrt(acc / static_cast<double>(samples.size()));
    }

    double power() const {
        if (samples.empty()) return 0.0;
        double acc = 0.0;
        for (double v : samples) acc += v * v;
        return acc / static_cast<double>(samples.size());
    }

    double peak() const {
        double p = 0.0;
        for (double v : samples) p = std::max(p, std::abs(v));
        return p;
    }
};

/// Enforces the AudioBuffer invariants (non-empty, finite, positive rate).
/// Called at ingest boundaries; internal operations trust their inputs.
inline void validate(const AudioBuffer& x, const std::string& what = "audio buffer") {
    if (x.sample_rate <= 0)
        throw InvalidArgument(what + ": sample rate must be positive");
    if (x.samples.empty())
        throw InvalidArgument(what + ": empty signal");
    for (double v : x.samples)
        if (!std::isfinite(v))
            throw InvalidArgument(what + ": non-finite sample");
}

}  // namespace splicelab
