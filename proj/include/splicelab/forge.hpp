// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "splicelab/audio.hpp"
#include "splicelab/manifest.hpp"
#include "splicelab/vad.hpp"

namespace splicelab {

struct SourceId {
    std::string id;    // typically the source filename
    std::string role;  // "real" | "fake"

    std::string tagged() const { return role.empty() && id.empty() ? "" : role + ":" + id; }
};

/// Provenance of one generated spliced track.
struct SpliceRecord {
    SourceId source_a;
    SourceId source_b;
    std::size_t splice_sample = 0;  // center of the crossfade overlap
    std::size_t ola_window = 0;
    std::optional<double> noise_snr_db;
    bool highpass_applied = false;
    std::uint64_t rng_seed = 0;
};

/// Joins seg1 and seg2 with a half-window overlap: the last W/2 samples of
/// seg1 are scaled by the descending half of a periodic Hann window of length
/// W, the first W/2 samples of seg2 by the ascending half, and the two
/// regions are summed. Output length = len1 + len2 - W/2. The halves sum to
/// one, so a constant signal passes through the joint unchanged.
AudioBuffer ola_crossfade(const AudioBuffer& seg1, const AudioBuffer& seg2, std::size_t ola_window);

struct ForgeResult {
    AudioBuffer audio;
    SpliceRecord record;
};

/// The three-step recipe: anchor both tracks at their longest interior
/// silence, cut host_a at the end of its silence and host_b at the start of
/// its own, then crossfade. A seeded coin flip decides which host supplies
/// the leading segment.
ForgeResult forge_splice(const AudioBuffer& host_a, const AudioBuffer& host_b,
                         std::size_t ola_window, const VadConfig& cfg, std::uint64_t seed,
                         const SourceId& id_a = {}, const SourceId& id_b = {});

struct NoiseSpec {
    double snr_db = 60.0;
    std::uint64_t seed = 0;
    int lowpass_order = 7;
    double lowpass_cutoff_hz = 80.0;
};

/// Adds low-pass-shaped white noise. The noise is filtered first, then scaled
/// so 10*log10(P_signal / P_filtered_noise) = snr_db over the full track.
/// Throws UndefinedSnrError for an all-zero input.
AudioBuffer inject_lowband_noise(const AudioBuffer& x, const NoiseSpec& spec);

/// Order-8 Butterworth high-pass at 100 Hz, the brute-force artifact removal.
AudioBuffer highpass_mitigate(const AudioBuffer& x);

enum class WavEncoding { pcm16, float32 };

struct CorpusConfig {
    std::filesystem::path real_dir;
    std::filesystem::path fake_dir;
    std::filesystem::path out_dir;
    std::size_t count = 0;  // spliced tracks; the same number of bona fide tracks is sampled
    std::size_t ola_window = 256;
    std::optional<double> noise_snr_db;  // applied to spliced tracks only
    bool highpass = false;               // applied to spliced tracks
    bool highpass_bona_fide = false;     // optionally also to the sampled real tracks
    std::uint64_t seed = 0;
    VadConfig vad;
    WavEncoding encoding = WavEncoding::pcm16;
};

/// Builds a labeled corpus under cfg.out_dir: count spliced tracks forged
/// from (real, fake) source pairs plus count untouched bona fide tracks
/// sampled without replacement from real_dir, and writes manifest.csv.
/// Deterministic for a given seed, independent of thread count: track i draws
/// from a generator seeded with derive_seed(seed, i).
/// Throws CorpusExhaustedError naming the shortfall if sources run out.
std::vector<ManifestRow> generate_corpus(const CorpusConfig& cfg);

}  // namespace splicelab
