// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/forge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <mutex>
#include <optional>

#include "splicelab/errors.hpp"
#include "splicelab/iir.hpp"
#include "splicelab/rng.hpp"
#include "splicelab/wav.hpp"
#include "splicelab/window.hpp"

namespace splicelab {

AudioBuffer ola_crossfade(const AudioBuffer& seg1, const AudioBuffer& seg2,
                          std::size_t ola_window) {
    if (seg1.sample_rate != seg2.sample_rate)
        throw InvalidArgument("ola_crossfade: sample rates differ");
    if (ola_window < 2 || ola_window % 2 != 0)
        throw InvalidArgument("ola_crossfade: window length must be even and >= 2");
    const std::size_t half = ola_window / 2;
    if (seg1.size() <= half || seg2.size() <= half)
        throw TooShortError("ola_crossfade: segment shorter than half the OLA window (" +
                            std::to_string(half) + " samples)");

    const WindowFunction w = make_window(WindowKind::hann_periodic, ola_window);

    AudioBuffer out;
    out.sample_rate = seg1.sample_rate;
    out.samples.resize(seg1.size() + seg2.size() - half);

    const std::size_t fade_start = seg1.size() - half;
    std::copy(seg1.samples.begin(), seg1.samples.begin() + static_cast<std::ptrdiff_t>(fade_start),
              out.samples.begin());
    // Descending half of the window on the tail of seg1, ascending half on
    // the head of seg2; the two sum to exactly 1 at every overlap position.
    for (std::size_t j = 0; j < half; ++j)
        out.samples[fade_start + j] =
            seg1.samples[fade_start + j] * w.values[half + j] + seg2.samples[j] * w.values[j];
    std::copy(seg2.samples.begin() + static_cast<std::ptrdiff_t>(half), seg2.samples.end(),
              out.samples.begin() + static_cast<std::ptrdiff_t>(seg1.size()));
    return out;
}

ForgeResult forge_splice(const AudioBuffer& host_a, const AudioBuffer& host_b,
                         std::size_t ola_window, const VadConfig& cfg, std::uint64_t seed,
                         const SourceId& id_a, const SourceId& id_b) {
    if (host_a.sample_rate != host_b.sample_rate)
        throw InvalidArgument("forge_splice: sample rates differ");

    const SilentRegion silence_a = find_longest_silence(host_a, cfg);
    const SilentRegion silence_b = find_longest_silence(host_b, cfg);

    Rng rng(seed);
    const bool b_first = rng.coin_flip();

    // The leading host contributes everything up to the end of its longest
    // silence; the other host contributes from the start of its own silence
    // to its end.
    AudioBuffer first, second;
    first.sample_rate = second.sample_rate = host_a.sample_rate;
    if (!b_first) {
        first.samples.assign(host_a.samples.begin(),
                             host_a.samples.begin() + static_cast<std::ptrdiff_t>(silence_a.end));
        second.samples.assign(host_b.samples.begin() + static_cast<std::ptrdiff_t>(silence_b.start),
                              host_b.samples.end());
    } else {
        first.samples.assign(host_b.samples.begin(),
                             host_b.samples.begin() + static_cast<std::ptrdiff_t>(silence_b.end));
        second.samples.assign(host_a.samples.begin() + static_cast<std::ptrdiff_t>(silence_a.start),
                              host_a.samples.end());
    }

    ForgeResult res;
    res.audio = ola_crossfade(first, second, ola_window);
    res.record.source_a = id_a;
    res.record.source_b = id_b;
    res.record.ola_window = ola_window;
    res.record.rng_seed = seed;
    // Center of the overlap [len1 - W/2, len1).
    res.record.splice_sample = first.size() - ola_window / 2 + ola_window / 4;
    return res;
}

AudioBuffer inject_lowband_noise(const AudioBuffer& x, const NoiseSpec& spec) {
    const double p_signal = x.power();
    if (p_signal <= 0.0)
        throw UndefinedSnrError("inject_lowband_noise: silent input, SNR undefined");

    AudioBuffer noise;
    noise.sample_rate = x.sample_rate;
    noise.samples.resize(x.size());
    Rng rng(spec.seed);
    for (double& v : noise.samples) v = rng.gaussian();

    const IirFilter lp = design_butterworth(FilterKind::lowpass, spec.lowpass_order,
                                            spec.lowpass_cutoff_hz, x.sample_rate);
    noise = apply_filter(lp, noise);

    const double p_noise = noise.power();
    const double scale = std::sqrt(p_signal / (p_noise * std::pow(10.0, spec.snr_db / 10.0)));

    AudioBuffer out = x;
    for (std::size_t i = 0; i < out.size(); ++i) out.samples[i] += scale * noise.samples[i];
    return out;
}

AudioBuffer highpass_mitigate(const AudioBuffer& x) {
    return apply_filter(design_butterworth(FilterKind::highpass, 8, 100.0, x.sample_rate), x);
}

namespace {

std::vector<std::filesystem::path> list_wavs(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw IoError("source directory not found: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".wav")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
    return files;
}

// Sources load lazily and stay cached (with their VAD result) so repeated
// draws of the same track cost one decode. Shared across worker threads.
class SourcePool {
  public:
    explicit SourcePool(std::vector<std::filesystem::path> files) : files_(std::move(files)) {}

    std::size_t size() const { return files_.size(); }
    const std::filesystem::path& path(std::size_t i) const { return files_[i]; }

    struct Entry {
        AudioBuffer audio;
        std::optional<SilentRegion> silence;  // nullopt = no usable silence
    };

    const Entry& get(std::size_t i, const VadConfig& vad) {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = cache_.find(i);
        if (it != cache_.end()) return *it->second;

        auto entry = std::make_unique<Entry>();
        entry->audio = read_wav(files_[i]);
        validate(entry->audio, files_[i].string());
        try {
            entry->silence = find_longest_silence(entry->audio, vad);
        } catch (const NoSilenceError&) {
            entry->silence = std::nullopt;
        } catch (const TooShortError&) {
            entry->silence = std::nullopt;
        }
        auto [pos, inserted] = cache_.emplace(i, std::move(entry));
        (void)inserted;
        return *pos->second;
    }

  private:
    std::vector<std::filesystem::path> files_;
    std::mutex mutex_;
    std::unordered_map<std::size_t, std::unique_ptr<Entry>> cache_;
};

std::string track_name(const char* prefix, std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s_%05zu.wav", prefix, i);
    return buf;
}

}  // namespace

std::vector<ManifestRow> generate_corpus(const CorpusConfig& cfg) {
    if (cfg.count == 0) throw InvalidArgument("generate_corpus: count must be >= 1");

    SourcePool reals(list_wavs(cfg.real_dir));
    SourcePool fakes(list_wavs(cfg.fake_dir));
    if (reals.size() == 0 || fakes.size() == 0)
        throw CorpusExhaustedError("generate_corpus: need at least one real and one fake source (have " +
                                   std::to_string(reals.size()) + " real, " +
                                   std::to_string(fakes.size()) + " fake)");
    if (cfg.count > reals.size())
        throw CorpusExhaustedError("generate_corpus: " + std::to_string(cfg.count) +
                                   " bona fide tracks requested but only " +
                                   std::to_string(reals.size()) +
                                   " real sources available (shortfall " +
                                   std::to_string(cfg.count - reals.size()) + ")");

    std::filesystem::create_directories(cfg.out_dir);
    const WavFormat out_fmt{cfg.encoding == WavEncoding::pcm16 ? WavFormat::Encoding::pcm16
                                                               : WavFormat::Encoding::float32,
                            0};

    const std::int64_t count = static_cast<std::int64_t>(cfg.count);
    std::vector<ManifestRow> spliced_rows(cfg.count);
    std::vector<std::uint8_t> failed(cfg.count, 0);
    std::vector<std::string> errors(cfg.count);

    constexpr int kMaxAttempts = 64;

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const std::uint64_t track_seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(i));
            Rng rng(track_seed);
            bool done = false;
            for (int attempt = 0; attempt < kMaxAttempts && !done; ++attempt) {
                const std::size_t a_idx = static_cast<std::size_t>(rng.below(reals.size()));
                const std::size_t b_idx = static_cast<std::size_t>(rng.below(fakes.size()));
                const std::uint64_t forge_seed = rng.next();
                const std::uint64_t noise_seed = rng.next();

                const auto& a = reals.get(a_idx, cfg.vad);
                const auto& b = fakes.get(b_idx, cfg.vad);
                if (!a.silence || !b.silence) continue;
                if (a.audio.sample_rate != b.audio.sample_rate)
                    throw InvalidArgument("sources disagree on sample rate: " +
                                          reals.path(a_idx).string() + " vs " +
                                          fakes.path(b_idx).string());

                ForgeResult forged;
                try {
                    forged = forge_splice(a.audio, b.audio, cfg.ola_window, cfg.vad, forge_seed,
                                          {reals.path(a_idx).filename().string(), "real"},
                                          {fakes.path(b_idx).filename().string(), "fake"});
                } catch (const TooShortError&) {
                    continue;
                }

                if (cfg.noise_snr_db) {
                    forged.audio = inject_lowband_noise(
                        forged.audio, NoiseSpec{*cfg.noise_snr_db, noise_seed, 7, 80.0});
                    forged.record.noise_snr_db = cfg.noise_snr_db;
                }
                if (cfg.highpass) {
                    forged.audio = highpass_mitigate(forged.audio);
                    forged.record.highpass_applied = true;
                }

                const std::string name = track_name("spliced", static_cast<std::size_t>(i));
                const bool peak_warning = forged.audio.peak() > 1.0;
                write_wav(cfg.out_dir / name, forged.audio, out_fmt);

                ManifestRow row;
                row.path = name;
                row.label = "spliced";
                row.splice_sample = forged.record.splice_sample;
                row.source_a = forged.record.source_a.tagged();
                row.source_b = forged.record.source_b.tagged();
                row.ola_window = forged.record.ola_window;
                row.noise_snr_db = forged.record.noise_snr_db;
                row.highpass = forged.record.highpass_applied;
                row.seed = track_seed;
                row.peak_warning = peak_warning;
                spliced_rows[static_cast<std::size_t>(i)] = std::move(row);
                done = true;
            }
            if (!done) {
                failed[static_cast<std::size_t>(i)] = 1;
                errors[static_cast<std::size_t>(i)] = "no usable source pair after " +
                                                      std::to_string(kMaxAttempts) + " attempts";
            }
        } catch (const std::exception& e) {
            failed[static_cast<std::size_t>(i)] = 1;
            errors[static_cast<std::size_t>(i)] = e.what();
        }
    }

    std::size_t num_failed = 0;
    std::string first_error;
    for (std::size_t i = 0; i < cfg.count; ++i)
        if (failed[i]) {
            ++num_failed;
            if (first_error.empty()) first_error = errors[i];
        }
    if (num_failed > 0)
        throw CorpusExhaustedError("generate_corpus: " + std::to_string(num_failed) + " of " +
                                   std::to_string(cfg.count) +
                                   " spliced tracks could not be built (first failure: " +
                                   first_error + ")");

    // Bona fide sample: seeded shuffle of the real sources, without replacement.
    std::vector<std::size_t> order(reals.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    Rng bona_rng(derive_seed(cfg.seed, 0x626F6E61ull));  // distinct stream from track seeds
    for (std::size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[bona_rng.below(i)]);

    std::vector<ManifestRow> bona_rows(cfg.count);
    std::vector<std::string> bona_errors(cfg.count);
    std::vector<std::uint8_t> bona_failed(cfg.count, 0);

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const std::size_t src = order[static_cast<std::size_t>(i)];
            const auto& entry = reals.get(src, cfg.vad);
            AudioBuffer audio = entry.audio;
            bool hp = false;
            if (cfg.highpass_bona_fide) {
                audio = highpass_mitigate(audio);
                hp = true;
            }
            const std::string name = track_name("bona", static_cast<std::size_t>(i));
            const bool peak_warning = audio.peak() > 1.0;
            write_wav(cfg.out_dir / name, audio, out_fmt);

            ManifestRow row;
            row.path = name;
            row.label = "bona_fide";
            row.source_a = SourceId{reals.path(src).filename().string(), "real"}.tagged();
            row.highpass = hp;
            row.seed = derive_seed(cfg.seed, 0x626F6E61ull);
            row.peak_warning = peak_warning;
            bona_rows[static_cast<std::size_t>(i)] = std::move(row);
        } catch (const std::exception& e) {
            bona_failed[static_cast<std::size_t>(i)] = 1;
            bona_errors[static_cast<std::size_t>(i)] = e.what();
        }
    }
    for (std::size_t i = 0; i < cfg.count; ++i)
        if (bona_failed[i]) throw IoError("generate_corpus: bona fide track failed: " + bona_errors[i]);

    std::vector<ManifestRow> rows;
    rows.reserve(2 * cfg.count);
    rows.insert(rows.end(), spliced_rows.begin(), spliced_rows.end());
    rows.insert(rows.end(), bona_rows.begin(), bona_rows.end());
    write_manifest(cfg.out_dir / "manifest.csv", rows);
    return rows;
}

}  // namespace splicelab
