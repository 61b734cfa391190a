// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/stft.hpp"

#include <cmath>
#include <cstdint>

#include "splicelab/errors.hpp"
#include "splicelab/fft.hpp"

namespace splicelab {

namespace {

// One STFT column: window, transform, magnitude in dB clamped at floor_db.
// Shared by the parallel and serial drivers so their outputs are bitwise equal.
void stft_frame(std::span<const double> samples, const WindowFunction& window,
                double floor_db, std::vector<double>& scratch, std::span<double> out_db) {
    const std::size_t len = window.length();
    scratch.resize(len);
    for (std::size_t n = 0; n < len; ++n) scratch[n] = samples[n] * window.values[n];

    auto mag = dft_magnitude(scratch);
    for (std::size_t k = 0; k < mag.size(); ++k) {
        double db = mag[k] > 0.0 ? 20.0 * std::log10(mag[k]) : floor_db;
        out_db[k] = db < floor_db ? floor_db : db;
    }
}

Spectrogram stft_db_impl(const AudioBuffer& signal, const WindowFunction& window,
                         std::size_t hop, double floor_db, bool parallel) {
    if (hop < 1) throw InvalidArgument("stft hop must be >= 1");
    const std::size_t len = window.length();
    if (signal.size() < len)
        throw EmptySpectrogramError("signal (" + std::to_string(signal.size()) +
                                    " samples) shorter than one analysis window (" +
                                    std::to_string(len) + ")");

    Spectrogram spec;
    spec.win_len = len;
    spec.hop = hop;
    spec.floor_db = floor_db;
    spec.num_bins = len / 2 + 1;
    spec.num_frames = stft_frame_count(signal.size(), len, hop);
    spec.bin_hz = static_cast<double>(signal.sample_rate) / static_cast<double>(len);
    spec.values_db.resize(spec.num_bins * spec.num_frames);

    const std::int64_t frames = static_cast<std::int64_t>(spec.num_frames);
    if (parallel) {
#pragma omp parallel
        {
            std::vector<double> scratch;
#pragma omp for schedule(static)
            for (std::int64_t m = 0; m < frames; ++m) {
                const std::size_t off = static_cast<std::size_t>(m) * hop;
                stft_frame({signal.samples.data() + off, len}, window, floor_db, scratch,
                           {spec.values_db.data() + static_cast<std::size_t>(m) * spec.num_bins,
                            spec.num_bins});
            }
        }
    } else {
        std::vector<double> scratch;
        for (std::int64_t m = 0; m < frames; ++m) {
            const std::size_t off = static_cast<std::size_t>(m) * hop;
            stft_frame({signal.samples.data() + off, len}, window, floor_db, scratch,
                       {spec.values_db.data() + static_cast<std::size_t>(m) * spec.num_bins,
                        spec.num_bins});
        }
    }
    return spec;
}

}  // namespace

std::size_t stft_frame_count(std::size_t n, std::size_t win, std::size_t hop) {
    if (n < win) return 0;
    return (n - win) / hop + 1;
}

Spectrogram stft_db(const AudioBuffer& signal, const WindowFunction& window,
                    std::size_t hop, double floor_db) {
    return stft_db_impl(signal, window, hop, floor_db, /*parallel=*/true);
}

namespace serial {
Spectrogram stft_db(const AudioBuffer& signal, const WindowFunction& window,
                    std::size_t hop, double floor_db) {
    return stft_db_impl(signal, window, hop, floor_db, /*parallel=*/false);
}
}  // namespace serial

}  // namespace splicelab
