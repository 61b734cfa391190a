// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace splicelab {

/// One corpus entry. `path` is stored relative to the manifest file so a
/// corpus directory can be moved or compared byte-for-byte across runs.
struct ManifestRow {
    std::string path;
    std::string label;  // "bona_fide" | "spliced"
    std::optional<std::size_t> splice_sample;
    std::string source_a;  // "role:id", e.g. "real:LA_T_0001.wav"
    std::string source_b;
    std::optional<std::size_t> ola_window;
    std::optional<double> noise_snr_db;
    bool highpass = false;
    std::uint64_t seed = 0;
    bool peak_warning = false;
};

inline const char* kManifestHeader =
    "path,label,splice_sample,source_a,source_b,ola_window,noise_snr_db,highpass,seed,peak_warning";

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRow>& rows);

/// Strict parse: exact header, exact column count, typed errors with line
/// numbers. Empty numeric fields map to nullopt.
std::vector<ManifestRow> read_manifest(const std::filesystem::path& path);

}  // namespace splicelab
