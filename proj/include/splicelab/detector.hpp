// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "splicelab/audio.hpp"
#include "splicelab/stft.hpp"
#include "splicelab/window.hpp"

namespace splicelab {

/// Set of spectrogram rows the detector averages. The paper's presets select
/// quiet bands: the lowest 16 bins of a 4096-sample STFT (PartialSpoof) or
/// the highest 5 bins of a 2048-sample STFT (HAD).
struct BandSelection {
    enum class Mode { lowest_n, highest_n, explicit_bins };
    Mode mode = Mode::lowest_n;
    std::size_t n = 16;
    std::vector<std::size_t> bins;  // explicit_bins only

    /// Concrete bin indices for a spectrogram with num_bins rows.
    /// Highest-n includes the Nyquist bin.
    std::vector<std::size_t> resolve(std::size_t num_bins) const;
};

struct DetectorConfig {
    WindowKind window = WindowKind::hann_periodic;
    std::size_t win_len = 4096;
    std::size_t hop = 1024;  // paper: a quarter of the window
    double floor_db = kDefaultFloorDb;
    BandSelection band;
    std::size_t trim_frames = 0;  // frames dropped from each end of v before max-min

    static DetectorConfig partialspoof();  // hann 4096, hop 1024, lowest 16 bins
    static DetectorConfig had();           // hann 2048, hop 512, highest 5 bins
};

struct DetectionScore {
    std::string track_id;
    std::vector<double> v;      // per-frame band-averaged dB
    double d = 0.0;             // max(v) - min(v); higher = more likely spliced
    std::size_t peak_frame = 0;  // argmax(v), a localization diagnostic
};

/// v[m] = mean over k in F of X_dB[k, m].
std::vector<double> band_average(const Spectrogram& spec, const BandSelection& band);

/// max(v) - min(v); v must be non-empty.
double dynamic_range(std::span<const double> v);

/// stft_db -> band_average -> dynamic_range.
/// Throws TooShortError when the track is shorter than one analysis window.
DetectionScore score_track(const AudioBuffer& x, const DetectorConfig& cfg,
                           const std::string& track_id = "");

}  // namespace splicelab
