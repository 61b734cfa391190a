// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/labels.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "splicelab/errors.hpp"

namespace splicelab {

bool SegmentLabels::spliced() const {
    bool has_real = false, has_fake = false;
    for (const auto& s : segments) (s.cls == SegmentClass::real ? has_real : has_fake) = true;
    return has_real && has_fake;
}

std::vector<double> SegmentLabels::splice_times() const {
    std::vector<double> times;
    for (std::size_t i = 1; i < segments.size(); ++i)
        if (segments[i].cls != segments[i - 1].cls) times.push_back(segments[i].start_s);
    return times;
}

LabelDialect label_dialect_from_string(const std::string& name) {
    if (name == "native") return LabelDialect::native;
    if (name == "partialspoof") return LabelDialect::partialspoof;
    if (name == "had") return LabelDialect::had;
    throw InvalidArgument("unknown label dialect: " + name);
}

namespace {

double parse_seconds(const std::string& tok, const std::string& ctx) {
    double v{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0.0)
        throw ParseError("labels: bad timestamp '" + tok + "' at " + ctx);
    return v;
}

std::vector<std::string> whitespace_split(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

SegmentClass class_from_token(const std::string& tok, LabelDialect dialect, const std::string& ctx) {
    switch (dialect) {
        case LabelDialect::native:
            if (tok == "real") return SegmentClass::real;
            if (tok == "fake") return SegmentClass::fake;
            break;
        case LabelDialect::partialspoof:
            if (tok == "bonafide") return SegmentClass::real;
            if (tok == "spoof") return SegmentClass::fake;
            break;
        case LabelDialect::had:
            if (tok == "T") return SegmentClass::real;
            if (tok == "F") return SegmentClass::fake;
            break;
    }
    throw ParseError("labels: unknown class token '" + tok + "' at " + ctx);
}

}  // namespace

std::vector<SegmentLabels> read_segment_labels(const std::filesystem::path& path,
                                               LabelDialect dialect) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open label file: " + path.string());

    // Preserve first-seen track order while accumulating segments per track.
    std::vector<std::string> order;
    std::map<std::string, std::vector<Segment>> tracks;

    std::string line;
    std::size_t lineno = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        saw_content = true;
        const std::string ctx = path.filename().string() + ":" + std::to_string(lineno);

        std::string id;
        std::vector<Segment> segs;
        if (dialect == LabelDialect::native) {
            auto f = split_on(line, ',');
            if (f.size() != 4)
                throw ParseError("labels: expected 4 CSV fields at " + ctx + ", got " +
                                 std::to_string(f.size()));
            id = f[0];
            segs.push_back({parse_seconds(f[1], ctx), parse_seconds(f[2], ctx),
                            class_from_token(f[3], dialect, ctx)});
        } else if (dialect == LabelDialect::partialspoof) {
            auto f = whitespace_split(line);
            if (f.size() != 4)
                throw ParseError("labels: expected 4 fields at " + ctx + ", got " +
                                 std::to_string(f.size()));
            id = f[0];
            segs.push_back({parse_seconds(f[1], ctx), parse_seconds(f[2], ctx),
                            class_from_token(f[3], dialect, ctx)});
        } else {  // had
            auto f = whitespace_split(line);
            if (f.size() != 2)
                throw ParseError("labels: expected 'id segments' at " + ctx + ", got " +
                                 std::to_string(f.size()) + " fields");
            id = f[0];
            for (const std::string& part : split_on(f[1], '/')) {
                auto bits = split_on(part, '-');
                if (bits.size() != 3)
                    throw ParseError("labels: bad segment '" + part + "' at " + ctx);
                segs.push_back({parse_seconds(bits[0], ctx), parse_seconds(bits[1], ctx),
                                class_from_token(bits[2], dialect, ctx)});
            }
        }

        if (tracks.find(id) == tracks.end()) order.push_back(id);
        auto& dst = tracks[id];
        dst.insert(dst.end(), segs.begin(), segs.end());
    }
    if (!saw_content) throw ParseError("labels: file is empty: " + path.string());

    std::vector<SegmentLabels> out;
    for (const auto& id : order) {
        SegmentLabels t;
        t.track_id = id;
        t.segments = tracks[id];
        std::string offenders;
        for (const auto& s : t.segments)
            if (!(s.end_s > s.start_s))
                offenders += " [" + std::to_string(s.start_s) + "," + std::to_string(s.end_s) + ")";
        if (!offenders.empty())
            throw ParseError("labels: empty or inverted segments for track '" + id + "':" + offenders);
        // Segments must arrive ordered; reject rather than silently sorting.
        for (std::size_t i = 1; i < t.segments.size(); ++i) {
            if (t.segments[i].start_s < t.segments[i - 1].end_s - 1e-9)
                throw ParseError("labels: overlapping or unordered segments for track '" + id +
                                 "' near " + std::to_string(t.segments[i].start_s) + "s");
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace splicelab
