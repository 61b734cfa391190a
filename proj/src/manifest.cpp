// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/manifest.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "splicelab/errors.hpp"

namespace splicelab {

namespace {

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    fields.push_back(cur);
    return fields;
}

double parse_double(const std::string& s, const std::string& ctx) {
    double v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("manifest: bad number '" + s + "' in " + ctx);
    return v;
}

std::uint64_t parse_u64(const std::string& s, const std::string& ctx) {
    std::uint64_t v{};
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("manifest: bad integer '" + s + "' in " + ctx);
    return v;
}

bool parse_bool(const std::string& s, const std::string& ctx) {
    if (s == "1") return true;
    if (s == "0") return false;
    throw ParseError("manifest: bad flag '" + s + "' in " + ctx + " (want 0 or 1)");
}

}  // namespace

void write_manifest(const std::filesystem::path& path, const std::vector<ManifestRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open manifest for writing: " + path.string());
    out << kManifestHeader << "\n";
    for (const auto& r : rows) {
        out << r.path << ',' << r.label << ',';
        if (r.splice_sample) out << *r.splice_sample;
        out << ',' << r.source_a << ',' << r.source_b << ',';
        if (r.ola_window) out << *r.ola_window;
        out << ',';
        if (r.noise_snr_db) out << format_double(*r.noise_snr_db);
        out << ',' << (r.highpass ? '1' : '0') << ',' << r.seed << ','
            << (r.peak_warning ? '1' : '0') << "\n";
    }
    if (!out) throw IoError("write failed: " + path.string());
}

std::vector<ManifestRow> read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest: " + path.string());

    std::string line;
    if (!std::getline(in, line)) throw ParseError("manifest is empty: " + path.string());
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kManifestHeader)
        throw ParseError("manifest header mismatch in " + path.string() + ": got '" + line + "'");

    std::vector<ManifestRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string ctx = path.string() + ":" + std::to_string(lineno);
        auto f = split_csv(line);
        if (f.size() != 10)
            throw ParseError("manifest: expected 10 fields, got " + std::to_string(f.size()) +
                             " in " + ctx);
        ManifestRow r;
        r.path = f[0];
        r.label = f[1];
        if (r.label != "bona_fide" && r.label != "spliced")
            throw ParseError("manifest: unknown label '" + r.label + "' in " + ctx);
        if (!f[2].empty()) r.splice_sample = static_cast<std::size_t>(parse_u64(f[2], ctx));
        r.source_a = f[3];
        r.source_b = f[4];
        if (!f[5].empty()) r.ola_window = static_cast<std::size_t>(parse_u64(f[5], ctx));
        if (!f[6].empty()) r.noise_snr_db = parse_double(f[6], ctx);
        r.highpass = parse_bool(f[7], ctx);
        r.seed = parse_u64(f[8], ctx);
        r.peak_warning = parse_bool(f[9], ctx);
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace splicelab
