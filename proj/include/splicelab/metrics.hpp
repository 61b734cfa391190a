// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "splicelab/detector.hpp"
#include "splicelab/manifest.hpp"

namespace splicelab {

struct LabeledScore {
    std::string track_id;
    double score = 0.0;
    bool spliced = false;  // true = positive class
};

struct RocPoint {
    double threshold;  // classify spliced when score >= threshold
    double fpr;
    double tpr;
};

/// Operating points at descending thresholds, from (0,0) to (1,1); ties in
/// the scores produce diagonal steps.
std::vector<RocPoint> roc_curve(const std::vector<LabeledScore>& scores);

/// Mann-Whitney AUC: fraction of (spliced, bona fide) pairs ordered
/// correctly, ties counting one half. Equals the trapezoidal area under
/// roc_curve. Requires at least one score per class.
double compute_auc(const std::vector<LabeledScore>& scores);

struct EerResult {
    double eer = 0.0;
    double threshold = 0.0;
};

/// Equal error rate from the threshold sweep: at each achievable false
/// positive rate keep the best operating point, interpolate linearly between
/// the two adjacent points where FPR - FNR changes sign.
EerResult compute_eer(const std::vector<LabeledScore>& scores);

struct EvalReport {
    double auc = 0.0;
    double eer = 0.0;
    double eer_threshold = 0.0;
    std::size_t n_pos = 0;
    std::size_t n_neg = 0;
    std::size_t excluded = 0;           // unreadable or too-short tracks
    std::vector<std::string> excluded_tracks;
    DetectorConfig config;
    std::vector<LabeledScore> scores;
    std::vector<RocPoint> roc;
};

/// Scores every manifest entry with the detector (in parallel), then
/// assembles the report. Tracks that cannot be scored are recorded and
/// excluded. Requires both labels present among the scored tracks.
EvalReport evaluate_corpus(const std::filesystem::path& manifest_path, const DetectorConfig& cfg);

/// Report serialization: JSON (auc, eer, counts, config echo, per-track
/// scores) and a threshold,fpr,tpr CSV for the ROC.
std::string report_to_json(const EvalReport& report);
EvalReport report_from_json(const std::string& json_text);
void write_report(const EvalReport& report, const std::filesystem::path& json_path);
void write_roc_csv(const EvalReport& report, const std::filesystem::path& csv_path);

}  // namespace splicelab
