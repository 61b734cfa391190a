// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>

#include "splicelab/detector.hpp"

namespace splicelab::cli {

// Exit codes: 0 success, 1 runtime/I-O failure, 2 usage error. Scores never
// affect exit codes.
constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
    std::uint64_t seed = 0;
    int threads = 0;  // 0 = all available
    bool quiet = false;
    std::string out_dir;  // default: $SPLICELAB_OUT or "."

    std::filesystem::path out() const { return out_dir; }
};

/// Resolved-configuration echo; machine output stays on stdout, this goes to
/// stderr and disappears under --quiet.
inline void log_config(const GlobalOptions& g, const std::string& line) {
    if (!g.quiet)
        std::cerr << "[splicelab] " << line << " (seed=" << g.seed << " threads="
                  << (g.threads > 0 ? std::to_string(g.threads) : std::string("auto"))
                  << " out=" << g.out_dir << ")\n";
}

inline void log_info(const GlobalOptions& g, const std::string& line) {
    if (!g.quiet) std::cerr << "[splicelab] " << line << "\n";
}

/// Phase flags accept plain radians or the tokens pi, -pi, pi/2, 2pi.
double parse_phase(const std::string& text);

/// Shared detector flag block: either --preset or explicit analysis flags.
struct DetectorFlags {
    std::string preset;  // "partialspoof" | "had" | ""
    std::string window = "hann";
    std::size_t win = 4096;
    std::size_t hop = 0;  // 0 = win/4
    double floor_db = -300.0;
    std::string band_mode = "lowest";  // lowest | highest | explicit
    std::size_t band_n = 16;
    std::string bins;  // comma-separated explicit bins
    std::size_t trim = 0;

    DetectorConfig resolve() const;
};

int cmd_demo_leakage(const GlobalOptions& g, double f0, int fs, std::size_t win, std::size_t hop,
                     std::size_t duration);
int cmd_demo_splice(const GlobalOptions& g, const std::string& scenario, double f0, int fs,
                    double amplitude, double amplitude2, const std::string& phase, std::size_t n1,
                    std::size_t n2, const std::string& window, std::size_t win, std::size_t hop);
int cmd_spectrogram(const GlobalOptions& g, const std::string& wav_path, std::size_t win,
                    std::size_t hop, const std::string& window, const std::string& exports,
                    double floor_db, double min_db, double max_db, const std::string& labels_path,
                    const std::string& dialect, const std::string& track_id);
int cmd_detect(const GlobalOptions& g, const std::string& input, const DetectorFlags& flags,
               const std::string& scores_path);
int cmd_forge(const GlobalOptions& g, const std::string& real_dir, const std::string& fake_dir,
              std::size_t count, std::size_t ola_window, double snr_db, bool have_snr,
              bool highpass, bool highpass_bona, bool float32, bool grid, double vad_threshold_db,
              double vad_frame_ms, double vad_hop_ms, double vad_min_region_ms);
int cmd_evaluate(const GlobalOptions& g, const std::string& manifest, bool grid,
                 const DetectorFlags& flags, const std::string& report_path);
int cmd_synth_hosts(const GlobalOptions& g, std::size_t count, double duration_s);

}  // namespace splicelab::cli
