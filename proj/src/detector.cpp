// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/detector.hpp"

#include <algorithm>

#include "splicelab/errors.hpp"

namespace splicelab {

std::vector<std::size_t> BandSelection::resolve(std::size_t num_bins) const {
    std::vector<std::size_t> out;
    switch (mode) {
        case Mode::lowest_n:
            if (n == 0 || n > num_bins)
                throw InvalidArgument("band: lowest_n with n=" + std::to_string(n) +
                                      " invalid for " + std::to_string(num_bins) + " bins");
            for (std::size_t k = 0; k < n; ++k) out.push_back(k);
            break;
        case Mode::highest_n:
            if (n == 0 || n > num_bins)
                throw InvalidArgument("band: highest_n with n=" + std::to_string(n) +
                                      " invalid for " + std::to_string(num_bins) + " bins");
            for (std::size_t k = num_bins - n; k < num_bins; ++k) out.push_back(k);
            break;
        case Mode::explicit_bins:
            if (bins.empty()) throw InvalidArgument("band: explicit bin list is empty");
            for (std::size_t k : bins)
                if (k >= num_bins)
                    throw InvalidArgument("band: bin " + std::to_string(k) + " out of range (" +
                                          std::to_string(num_bins) + " bins)");
            out = bins;
            break;
    }
    return out;
}

DetectorConfig DetectorConfig::partialspoof() {
    DetectorConfig cfg;
    cfg.window = WindowKind::hann_periodic;
    cfg.win_len = 4096;
    cfg.hop = 1024;
    cfg.band.mode = BandSelection::Mode::lowest_n;
    cfg.band.n = 16;
    return cfg;
}

DetectorConfig DetectorConfig::had() {
    DetectorConfig cfg;
    cfg.window = WindowKind::hann_periodic;
    cfg.win_len = 2048;
    cfg.hop = 512;
    cfg.band.mode = BandSelection::Mode::highest_n;
    cfg.band.n = 5;
    return cfg;
}

std::vector<double> band_average(const Spectrogram& spec, const BandSelection& band) {
    const auto bins = band.resolve(spec.num_bins);
    std::vector<double> v(spec.num_frames);
    const double inv = 1.0 / static_cast<double>(bins.size());
    for (std::size_t m = 0; m < spec.num_frames; ++m) {
        double acc = 0.0;
        for (std::size_t k : bins) acc += spec.at(k, m);
        v[m] = acc * inv;
    }
    return v;
}

double dynamic_range(std::span<const double> v) {
    if (v.empty()) throw InvalidArgument("dynamic_range: empty input");
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return *hi - *lo;
}

DetectionScore score_track(const AudioBuffer& x, const DetectorConfig& cfg,
                           const std::string& track_id) {
    if (x.size() < cfg.win_len)
        throw TooShortError("score_track: track '" + track_id + "' has " +
                            std::to_string(x.size()) + " samples, needs " +
                            std::to_string(cfg.win_len));

    const Spectrogram spec =
        stft_db(x, make_window(cfg.window, cfg.win_len), cfg.hop, cfg.floor_db);

    DetectionScore score;
    score.track_id = track_id;
    score.v = band_average(spec, cfg.band);

    std::span<const double> v(score.v);
    if (cfg.trim_frames > 0) {
        if (2 * cfg.trim_frames >= v.size())
            throw InvalidArgument("score_track: trim_frames leaves no frames");
        v = v.subspan(cfg.trim_frames, v.size() - 2 * cfg.trim_frames);
    }
    score.d = dynamic_range(v);
    score.peak_frame =
        cfg.trim_frames +
        static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
    return score;
}

}  // namespace splicelab
