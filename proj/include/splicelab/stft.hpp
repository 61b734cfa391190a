// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "splicelab/audio.hpp"
#include "splicelab/window.hpp"

namespace splicelab {

/// Time-frequency magnitude grid in dB, indexed [k: frequency bin, m: frame].
/// Stored frame-major: values_db[m * num_bins + k].
struct Spectrogram {
    std::vector<double> values_db;
    std::size_t num_bins = 0;
    std::size_t num_frames = 0;
    double bin_hz = 0.0;     // sample_rate / win_len
    std::size_t hop = 0;
    std::size_t win_len = 0;
    double floor_db = -300.0;

    double at(std::size_t bin, std::size_t frame) const {
        return values_db[frame * num_bins + bin];
    }
    std::span<const double> frame(std::size_t m) const {
        return {values_db.data() + m * num_bins, num_bins};
    }
};

constexpr double kDefaultFloorDb = -300.0;

/// Number of analysis frames: floor((n - win) / hop) + 1. The final partial
/// frame is dropped (no zero padding).
std::size_t stft_frame_count(std::size_t n, std::size_t win, std::size_t hop);

/// STFT amplitude in dB (20*log10), clamped at floor_db. Frame m covers
/// samples [m*hop, m*hop + L). Frames are computed in parallel.
/// Throws EmptySpectrogramError if the signal is shorter than one window.
Spectrogram stft_db(const AudioBuffer& signal, const WindowFunction& window,
                    std::size_t hop, double floor_db = kDefaultFloorDb);

namespace serial {
/// Single-threaded reference implementation; bitwise-identical output to
/// splicelab::stft_db. Kept for tests and the benchmark target.
Spectrogram stft_db(const AudioBuffer& signal, const WindowFunction& window,
                    std::size_t hop, double floor_db = kDefaultFloorDb);
}  // namespace serial

}  // namespace splicelab
