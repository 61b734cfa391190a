// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "splicelab/stft.hpp"

namespace splicelab {

/// Figure-style spectrogram export. csv writes one header row of bin center
/// frequencies plus one row per frame; pgm8 writes an 8-bit grayscale image
/// (time on x, low frequency at the bottom) with min_db -> 0, max_db -> 255,
/// clamped. Both formats get a JSON sidecar (<path>.json) describing axes,
/// the dB mapping, and optional splice timestamps.
struct SpectrogramExport {
    enum class Format { csv, pgm8 };
    Format format = Format::csv;
    double min_db = -120.0;  // pgm8 mapping
    double max_db = 0.0;
    std::vector<double> splice_times_s;  // optional ground-truth overlay
};

void export_spectrogram(const Spectrogram& spec, const SpectrogramExport& fmt,
                        const std::filesystem::path& path);

}  // namespace splicelab
