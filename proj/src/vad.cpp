// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/vad.hpp"

#include <cmath>
#include <vector>

#include "splicelab/errors.hpp"

namespace splicelab {

SilentRegion find_longest_silence(const AudioBuffer& x, const VadConfig& cfg) {
    const std::size_t frame = cfg.frame_samples(x.sample_rate);
    const std::size_t hop = cfg.hop_samples(x.sample_rate);
    if (hop < 1 || frame < hop) throw InvalidArgument("vad: need frame_len >= hop >= 1");
    if (x.size() <= frame)
        throw TooShortError("vad: track shorter than one VAD frame");
    if (!(cfg.min_region_ms > 0.0)) throw InvalidArgument("vad: min_region must be positive");

    // Prefix sums of x^2 give O(1) frame energies.
    std::vector<double> csum(x.size() + 1, 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) csum[i + 1] = csum[i] + x.samples[i] * x.samples[i];

    const double track_rms = std::sqrt(csum.back() / static_cast<double>(x.size()));
    const double threshold = track_rms * std::pow(10.0, cfg.threshold_db / 20.0);

    const std::size_t num_frames = (x.size() - frame) / hop + 1;
    std::vector<bool> silent(num_frames);
    for (std::size_t m = 0; m < num_frames; ++m) {
        const std::size_t off = m * hop;
        const double rms = std::sqrt((csum[off + frame] - csum[off]) / static_cast<double>(frame));
        silent[m] = rms < threshold;
    }

    const std::size_t min_samples =
        static_cast<std::size_t>(cfg.min_region_ms / 1000.0 * x.sample_rate);

    SilentRegion best{0, 0};
    std::size_t m = 0;
    while (m < num_frames) {
        if (!silent[m]) {
            ++m;
            continue;
        }
        std::size_t last = m;
        while (last + 1 < num_frames && silent[last + 1]) ++last;
        // Runs touching the first or last frame are leading/trailing silence.
        if (m > 0 && last < num_frames - 1) {
            SilentRegion region{m * hop, last * hop + frame};
            if (region.length() >= min_samples && region.length() > best.length())
                best = region;
        }
        m = last + 1;
    }

    if (best.length() == 0)
        throw NoSilenceError("vad: no interior silent region of at least " +
                             std::to_string(cfg.min_region_ms) + " ms");
    return best;
}

}  // namespace splicelab
