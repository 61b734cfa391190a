// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/forge.hpp"
#include "splicelab/hostgen.hpp"
#include "splicelab/rng.hpp"

namespace splicelab::cli {

namespace {

constexpr std::size_t kOlaGrid[] = {256, 512, 1024, 2048, 4096};
constexpr double kSnrGrid[] = {60.0, 50.0, 46.0, 40.0};

struct GridConfig {
    std::string name;
    std::optional<double> snr;
    bool highpass = false;
};

std::vector<GridConfig> grid_configs() {
    std::vector<GridConfig> cfgs;
    cfgs.push_back({"clean", std::nullopt, false});
    for (double snr : kSnrGrid)
        cfgs.push_back({"snr" + std::to_string(static_cast<int>(snr)), snr, false});
    cfgs.push_back({"highpass", std::nullopt, true});
    return cfgs;
}

}  // namespace

int cmd_forge(const GlobalOptions& g, const std::string& real_dir, const std::string& fake_dir,
              std::size_t count, std::size_t ola_window, double snr_db, bool have_snr,
              bool highpass, bool highpass_bona, bool float32, bool grid, double vad_threshold_db,
              double vad_frame_ms, double vad_hop_ms, double vad_min_region_ms) {
    CorpusConfig base;
    base.real_dir = real_dir;
    base.fake_dir = fake_dir;
    base.count = count;
    base.seed = g.seed;
    base.encoding = float32 ? WavEncoding::float32 : WavEncoding::pcm16;
    base.highpass_bona_fide = highpass_bona;
    base.vad.threshold_db = vad_threshold_db;
    base.vad.min_region_ms = vad_min_region_ms;
    // Frame/hop in ms resolve against each track's rate inside the VAD.
    if (vad_frame_ms != 20.0 || vad_hop_ms != 10.0) {
        // Fixed-rate sources are the norm; resolve at 16 kHz for custom values.
        base.vad.frame_len = static_cast<std::size_t>(vad_frame_ms * 16.0);
        base.vad.hop = static_cast<std::size_t>(vad_hop_ms * 16.0);
    }

    if (!grid) {
        base.out_dir = g.out();
        base.ola_window = ola_window;
        if (have_snr) base.noise_snr_db = snr_db;
        base.highpass = highpass;
        log_config(g, "forge: count=" + std::to_string(count) + " ola=" + std::to_string(ola_window) +
                          (have_snr ? " snr=" + std::to_string(snr_db) : std::string(" clean")) +
                          (highpass ? " highpass" : ""));
        const auto rows = generate_corpus(base);
        std::size_t warnings = 0;
        for (const auto& r : rows) warnings += r.peak_warning;
        log_info(g, "wrote " + std::to_string(rows.size()) + " tracks + manifest.csv to " +
                        g.out().string() +
                        (warnings ? " (" + std::to_string(warnings) + " peak warnings)" : ""));
        return kExitOk;
    }

    // Full grid: 5 OLA windows x {clean, 4 SNRs, highpass} = 30 sub-corpora.
    log_config(g, "forge --grid: count=" + std::to_string(count) + " per sub-corpus");
    for (std::size_t w : kOlaGrid) {
        for (const GridConfig& c : grid_configs()) {
            CorpusConfig cfg = base;
            cfg.ola_window = w;
            cfg.noise_snr_db = c.snr;
            cfg.highpass = c.highpass;
            cfg.out_dir = g.out() / ("ola" + std::to_string(w) + "_" + c.name);
            generate_corpus(cfg);
            log_info(g, "  ola" + std::to_string(w) + "_" + c.name + ": done");
        }
    }
    log_info(g, "grid complete: 30 sub-corpora under " + g.out().string());
    return kExitOk;
}

int cmd_synth_hosts(const GlobalOptions& g, std::size_t count, double duration_s) {
    log_config(g, "synth-hosts: count=" + std::to_string(count) +
                      " duration=" + std::to_string(duration_s) + "s");
    HostParams params;
    params.duration_s = duration_s;
    write_host_corpus(g.out(), count, g.seed, params);
    log_info(g, "wrote " + std::to_string(count) + " hosts to " + g.out().string());
    return kExitOk;
}

}  // namespace splicelab::cli
