// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "splicelab/audio.hpp"

namespace splicelab {

enum class FilterKind { lowpass, highpass };

/// One second-order section, direct form II transposed.
/// H(z) = (b0 + b1 z^-1 + b2 z^-2) / (1 + a1 z^-1 + a2 z^-2)
struct Biquad {
    double b0 = 1.0, b1 = 0.0, b2 = 0.0;
    double a1 = 0.0, a2 = 0.0;
};

/// Butterworth filter realized as a cascade of second-order sections,
/// designed by the bilinear transform with cutoff prewarping.
struct IirFilter {
    std::vector<Biquad> sections;
    FilterKind kind = FilterKind::lowpass;
    int order = 0;
    double cutoff_hz = 0.0;
    int sample_rate = 0;
};

/// order >= 1, 0 < cutoff_hz < sample_rate/2.
/// Lowpass DC gain and highpass Nyquist gain are exactly 1 by construction.
IirFilter design_butterworth(FilterKind kind, int order, double cutoff_hz, int sample_rate);

/// Causal single forward pass, zero initial state. Output has the same
/// length and sample rate as the input.
AudioBuffer apply_filter(const IirFilter& filter, const AudioBuffer& signal);

/// |H(e^{j 2 pi f / fs})| of the cascade.
double magnitude_response(const IirFilter& filter, double freq_hz);

double magnitude_response_db(const IirFilter& filter, double freq_hz);

/// Largest pole magnitude of the cascade; < 1 for a stable design.
double max_pole_magnitude(const IirFilter& filter);

/// Impulse response sampled over n samples.
std::vector<double> impulse_response(const IirFilter& filter, std::size_t n);

}  // namespace splicelab
