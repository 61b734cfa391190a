// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/iir.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

using cplx = std::complex<double>;

// Bilinear map s -> z with fs in Hz: z = (2 fs + s) / (2 fs - s).
cplx bilinear(cplx s, double fs) {
    const double k = 2.0 * fs;
    return (k + s) / (k - s);
}

// Normalizes one section so its own gain at the reference point (z = 1 for
// lowpass, z = -1 for highpass) is exactly 1; the cascade gain is then exact
// by construction.
void normalize_section(Biquad& s, FilterKind kind) {
    const double num = (kind == FilterKind::lowpass) ? (s.b0 + s.b1 + s.b2) : (s.b0 - s.b1 + s.b2);
    const double den = (kind == FilterKind::lowpass) ? (1.0 + s.a1 + s.a2) : (1.0 - s.a1 + s.a2);
    const double g = den / num;
    s.b0 *= g;
    s.b1 *= g;
    s.b2 *= g;
}

}  // namespace

IirFilter design_butterworth(FilterKind kind, int order, double cutoff_hz, int sample_rate) {
    if (order < 1) throw InvalidArgument("filter order must be >= 1");
    if (sample_rate <= 0) throw InvalidArgument("sample rate must be positive");
    const double nyquist = sample_rate / 2.0;
    if (!(cutoff_hz > 0.0) || cutoff_hz >= nyquist)
        throw InvalidArgument("cutoff must satisfy 0 < fc < sample_rate/2, got " +
                              std::to_string(cutoff_hz));

    const double fs = static_cast<double>(sample_rate);
    // Prewarp so the digital -3 dB point lands exactly on cutoff_hz.
    const double warped = 2.0 * fs * std::tan(std::numbers::pi * cutoff_hz / fs);

    IirFilter f;
    f.kind = kind;
    f.order = order;
    f.cutoff_hz = cutoff_hz;
    f.sample_rate = sample_rate;

    // Unit Butterworth poles on the left half unit circle:
    // p_k = exp(i pi (2k + n + 1) / (2n)), k = 0 .. n-1.
    // Conjugate pairs (k, n-1-k) form the biquads; the middle pole of an odd
    // order is real (= -1) and yields a first-order section.
    for (int k = 0; k < (order + 1) / 2; ++k) {
        const double theta =
            std::numbers::pi * (2.0 * k + order + 1.0) / (2.0 * order);
        const cplx proto = std::polar(1.0, theta);
        const bool is_real = (order % 2 == 1) && (k == (order - 1) / 2);

        const cplx s_pole = (kind == FilterKind::lowpass) ? warped * proto : warped / proto;
        const cplx z_pole = bilinear(s_pole, fs);

        Biquad sec;
        if (is_real) {
            // First-order section. Zero at z = -1 (lowpass) or z = +1 (highpass).
            sec.a1 = -z_pole.real();
            sec.a2 = 0.0;
            sec.b0 = 1.0;
            sec.b1 = (kind == FilterKind::lowpass) ? 1.0 : -1.0;
            sec.b2 = 0.0;
        } else {
            sec.a1 = -2.0 * z_pole.real();
            sec.a2 = std::norm(z_pole);
            sec.b0 = 1.0;
            sec.b1 = (kind == FilterKind::lowpass) ? 2.0 : -2.0;
            sec.b2 = 1.0;
        }
        normalize_section(sec, kind);
        f.sections.push_back(sec);
    }
    return f;
}

AudioBuffer apply_filter(const IirFilter& filter, const AudioBuffer& signal) {
    AudioBuffer out;
    out.sample_rate = signal.sample_rate;
    out.samples = signal.samples;
    for (const Biquad& s : filter.sections) {
        double z1 = 0.0, z2 = 0.0;
        for (double& v : out.samples) {
            const double x = v;
            const double y = s.b0 * x + z1;
            z1 = s.b1 * x - s.a1 * y + z2;
            z2 = s.b2 * x - s.a2 * y;
            v = y;
        }
    }
    return out;
}

double magnitude_response(const IirFilter& filter, double freq_hz) {
    const double w = 2.0 * std::numbers::pi * freq_hz / filter.sample_rate;
    const cplx z_inv = std::polar(1.0, -w);
    cplx h(1.0, 0.0);
    for (const Biquad& s : filter.sections) {
        const cplx num = s.b0 + z_inv * (s.b1 + z_inv * s.b2);
        const cplx den = 1.0 + z_inv * (s.a1 + z_inv * s.a2);
        h *= num / den;
    }
    return std::abs(h);
}

double magnitude_response_db(const IirFilter& filter, double freq_hz) {
    return 20.0 * std::log10(magnitude_response(filter, freq_hz));
}

double max_pole_magnitude(const IirFilter& filter) {
    double worst = 0.0;
    for (const Biquad& s : filter.sections) {
        // Roots of z^2 + a1 z + a2.
        const cplx disc = std::sqrt(cplx(s.a1 * s.a1 - 4.0 * s.a2, 0.0));
        const cplx r1 = (-s.a1 + disc) / 2.0;
        const cplx r2 = (-s.a1 - disc) / 2.0;
        worst = std::max({worst, std::abs(r1), std::abs(r2)});
    }
    return worst;
}

std::vector<double> impulse_response(const IirFilter& filter, std::size_t n) {
    AudioBuffer impulse;
    impulse.sample_rate = filter.sample_rate;
    impulse.samples.assign(n, 0.0);
    impulse.samples[0] = 1.0;
    return apply_filter(filter, impulse).samples;
}

}  // namespace splicelab
