// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/manifest.hpp"
#include "splicelab/wav.hpp"

namespace splicelab::cli {

DetectorConfig DetectorFlags::resolve() const {
    if (!preset.empty()) {
        if (preset == "partialspoof") return DetectorConfig::partialspoof();
        if (preset == "had") return DetectorConfig::had();
        throw InvalidArgument("--preset must be partialspoof or had, got '" + preset + "'");
    }
    DetectorConfig cfg;
    cfg.window = window_kind_from_string(window);
    cfg.win_len = win;
    cfg.hop = hop != 0 ? hop : win / 4;
    cfg.floor_db = floor_db;
    cfg.trim_frames = trim;
    if (band_mode == "lowest") {
        cfg.band.mode = BandSelection::Mode::lowest_n;
        cfg.band.n = band_n;
    } else if (band_mode == "highest") {
        cfg.band.mode = BandSelection::Mode::highest_n;
        cfg.band.n = band_n;
    } else if (band_mode == "explicit") {
        cfg.band.mode = BandSelection::Mode::explicit_bins;
        std::stringstream ss(bins);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t v{};
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || ptr != tok.data() + tok.size())
                throw InvalidArgument("--bins: bad bin index '" + tok + "'");
            cfg.band.bins.push_back(v);
        }
        if (cfg.band.bins.empty()) throw InvalidArgument("--band explicit requires --bins");
    } else {
        throw InvalidArgument("--band must be lowest | highest | explicit, got '" + band_mode + "'");
    }
    return cfg;
}

namespace {

std::string describe(const DetectorConfig& cfg) {
    return "window=" + to_string(cfg.window) + " win=" + std::to_string(cfg.win_len) +
           " hop=" + std::to_string(cfg.hop) + " band_bins=" +
           std::to_string(cfg.band.resolve(cfg.win_len / 2 + 1).size());
}

void write_scores_csv(std::ostream& out, const std::vector<DetectionScore>& scores) {
    out << "track,d,frames,peak_frame\n";
    char buf[32];
    for (const auto& s : scores) {
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), s.d);
        (void)ec;
        out << s.track_id << ',' << std::string(buf, ptr) << ',' << s.v.size() << ','
            << s.peak_frame << "\n";
    }
}

}  // namespace

int cmd_detect(const GlobalOptions& g, const std::string& input, const DetectorFlags& flags,
               const std::string& scores_path) {
    const DetectorConfig cfg = flags.resolve();
    log_config(g, "detect: " + input + " " + describe(cfg));

    std::vector<DetectionScore> scores;
    std::size_t skipped = 0;
    const std::filesystem::path in_path(input);
    if (in_path.extension() == ".csv") {
        const auto rows = read_manifest(in_path);
        const auto base = in_path.parent_path();
        for (const auto& row : rows) {
            try {
                scores.push_back(score_track(read_wav(base / row.path), cfg, row.path));
            } catch (const Error& e) {
                ++skipped;
                log_info(g, std::string("skipped: ") + e.what());
            }
        }
    } else {
        try {
            scores.push_back(score_track(read_wav(in_path), cfg, in_path.filename().string()));
        } catch (const TooShortError& e) {
            ++skipped;
            log_info(g, std::string("skipped: ") + e.what());
        }
    }

    if (!scores_path.empty()) {
        std::ofstream out(scores_path, std::ios::binary);
        if (!out) throw IoError("cannot open " + scores_path);
        write_scores_csv(out, scores);
    } else {
        write_scores_csv(std::cout, scores);
    }
    log_info(g, "scored " + std::to_string(scores.size()) + " tracks, skipped " +
                    std::to_string(skipped));
    return kExitOk;  // detection reports, it does not judge
}

}  // namespace splicelab::cli
