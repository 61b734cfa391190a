// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/spectrogram_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

void write_sidecar(const Spectrogram& spec, const SpectrogramExport& fmt,
                   const std::filesystem::path& path) {
    nlohmann::json j;
    j["num_bins"] = spec.num_bins;
    j["num_frames"] = spec.num_frames;
    j["bin_hz"] = spec.bin_hz;
    j["hop"] = spec.hop;
    j["win_len"] = spec.win_len;
    j["floor_db"] = spec.floor_db;
    j["format"] = fmt.format == SpectrogramExport::Format::csv ? "csv" : "pgm8";
    if (fmt.format == SpectrogramExport::Format::pgm8) {
        j["min_db"] = fmt.min_db;
        j["max_db"] = fmt.max_db;
        j["orientation"] = "time on x, low frequency at bottom";
    }
    if (!fmt.splice_times_s.empty()) j["splice_times_s"] = fmt.splice_times_s;

    const std::filesystem::path sidecar = path.string() + ".json";
    std::ofstream out(sidecar, std::ios::binary);
    if (!out) throw IoError("cannot open sidecar for writing: " + sidecar.string());
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + sidecar.string());
}

}  // namespace

void export_spectrogram(const Spectrogram& spec, const SpectrogramExport& fmt,
                        const std::filesystem::path& path) {
    if (spec.num_bins == 0 || spec.num_frames == 0)
        throw InvalidArgument("export_spectrogram: empty spectrogram");

    if (fmt.format == SpectrogramExport::Format::csv) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open csv for writing: " + path.string());
        for (std::size_t k = 0; k < spec.num_bins; ++k) {
            if (k) out << ',';
            out << format_double(static_cast<double>(k) * spec.bin_hz);
        }
        out << "\n";
        for (std::size_t m = 0; m < spec.num_frames; ++m) {
            const auto frame = spec.frame(m);
            for (std::size_t k = 0; k < spec.num_bins; ++k) {
                if (k) out << ',';
                out << format_double(frame[k]);
            }
            out << "\n";
        }
        if (!out) throw IoError("write failed: " + path.string());
    } else {
        if (!(fmt.max_db > fmt.min_db))
            throw InvalidArgument("export_spectrogram: pgm8 needs max_db > min_db");
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open pgm for writing: " + path.string());
        out << "P5\n" << spec.num_frames << " " << spec.num_bins << "\n255\n";
        const double scale = 255.0 / (fmt.max_db - fmt.min_db);
        std::vector<unsigned char> row(spec.num_frames);
        // Image rows run top to bottom; the top row is the highest bin.
        for (std::size_t k = spec.num_bins; k-- > 0;) {
            for (std::size_t m = 0; m < spec.num_frames; ++m) {
                double v = std::round((spec.at(k, m) - fmt.min_db) * scale);
                if (v < 0.0) v = 0.0;
                if (v > 255.0) v = 255.0;
                row[m] = static_cast<unsigned char>(v);
            }
            out.write(reinterpret_cast<const char*>(row.data()),
                      static_cast<std::streamsize>(row.size()));
        }
        if (!out) throw IoError("write failed: " + path.string());
    }

    write_sidecar(spec, fmt, path);
}

}  // namespace splicelab
