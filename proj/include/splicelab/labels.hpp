// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace splicelab {

enum class SegmentClass { real, fake };

struct Segment {
    double start_s = 0.0;
    double end_s = 0.0;
    SegmentClass cls = SegmentClass::real;
};

/// Fine-grained segment annotation of one track: sorted, non-overlapping.
struct SegmentLabels {
    std::string track_id;
    std::vector<Segment> segments;

    /// A track is spliced iff both classes appear.
    bool spliced() const;

    /// Class-change timestamps (the splicing points), in seconds.
    std::vector<double> splice_times() const;
};

/// Supported on-disk layouts. Field layouts are documented in the README;
/// parsers are strict apart from whitespace.
///   native:       CSV lines  track_id,start_s,end_s,{real|fake}
///   partialspoof: lines      track_id start_s end_s {bonafide|spoof}
///   had:          lines      track_id start-end-{T|F}[/start-end-{T|F}]...
enum class LabelDialect { native, partialspoof, had };

LabelDialect label_dialect_from_string(const std::string& name);

/// Parses a label file; segments of the same track are merged and validated
/// (ordered, non-overlapping), with offending lines named in errors.
std::vector<SegmentLabels> read_segment_labels(const std::filesystem::path& path,
                                               LabelDialect dialect);

}  // namespace splicelab
