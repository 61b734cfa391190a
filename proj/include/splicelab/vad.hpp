// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "splicelab/audio.hpp"

namespace splicelab {

/// Energy VAD configuration. Frame/hop default to 20 ms / 10 ms worth of
/// samples at the track's rate when left at 0.
struct VadConfig {
    std::size_t frame_len = 0;     // samples; 0 = 20 ms
    std::size_t hop = 0;           // samples; 0 = 10 ms
    double threshold_db = -40.0;   // relative to whole-track RMS
    double min_region_ms = 60.0;

    std::size_t frame_samples(int sample_rate) const {
        return frame_len != 0 ? frame_len : static_cast<std::size_t>(sample_rate / 50);
    }
    std::size_t hop_samples(int sample_rate) const {
        return hop != 0 ? hop : static_cast<std::size_t>(sample_rate / 100);
    }
};

/// Half-open sample interval [start, end), snapped to the VAD hop grid.
struct SilentRegion {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t length() const { return end - start; }
};

/// Longest maximal run of frames whose RMS is below threshold_db relative to
/// the whole-track RMS. Runs that include the first or last VAD frame are
/// leading/trailing silence and never qualify. Ties go to the earliest run.
/// Throws NoSilenceError when no interior run of at least min_region_ms exists.
SilentRegion find_longest_silence(const AudioBuffer& x, const VadConfig& cfg);

}  // namespace splicelab
