// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <sstream>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/labels.hpp"
#include "splicelab/spectrogram_io.hpp"
#include "splicelab/wav.hpp"

namespace splicelab::cli {

int cmd_spectrogram(const GlobalOptions& g, const std::string& wav_path, std::size_t win,
                    std::size_t hop, const std::string& window, const std::string& exports,
                    double floor_db, double min_db, double max_db, const std::string& labels_path,
                    const std::string& dialect, const std::string& track_id) {
    log_config(g, "spectrogram: " + wav_path + " win=" + std::to_string(win) +
                      " hop=" + std::to_string(hop) + " window=" + window);

    const AudioBuffer x = read_wav(wav_path);
    validate(x, wav_path);
    const Spectrogram spec = stft_db(x, make_window(window_kind_from_string(window), win), hop, floor_db);

    std::vector<double> splice_times;
    if (!labels_path.empty()) {
        const auto tracks = read_segment_labels(labels_path, label_dialect_from_string(dialect));
        const std::string stem = std::filesystem::path(wav_path).stem().string();
        const std::string wanted = track_id.empty() ? stem : track_id;
        const auto it = std::find_if(tracks.begin(), tracks.end(),
                                     [&](const SegmentLabels& t) { return t.track_id == wanted; });
        if (it == tracks.end())
            throw InvalidArgument("track '" + wanted + "' not found in " + labels_path);
        splice_times = it->splice_times();
        log_info(g, "overlaying " + std::to_string(splice_times.size()) + " splice timestamps");
    }

    const std::string stem = std::filesystem::path(wav_path).stem().string();
    std::filesystem::create_directories(g.out());

    std::stringstream list(exports);
    std::string fmt_name;
    bool wrote = false;
    while (std::getline(list, fmt_name, ',')) {
        SpectrogramExport fmt;
        fmt.splice_times_s = splice_times;
        if (fmt_name == "csv") {
            fmt.format = SpectrogramExport::Format::csv;
            export_spectrogram(spec, fmt, g.out() / (stem + "_spec.csv"));
        } else if (fmt_name == "pgm8") {
            fmt.format = SpectrogramExport::Format::pgm8;
            fmt.min_db = min_db;
            fmt.max_db = max_db;
            export_spectrogram(spec, fmt, g.out() / (stem + "_spec.pgm"));
        } else {
            throw InvalidArgument("--export: unknown format '" + fmt_name + "' (want csv,pgm8)");
        }
        wrote = true;
    }
    if (!wrote) throw InvalidArgument("--export: empty format list");
    log_info(g, "spectrogram: " + std::to_string(spec.num_frames) + " frames x " +
                    std::to_string(spec.num_bins) + " bins -> " + g.out().string());
    return kExitOk;
}

}  // namespace splicelab::cli
