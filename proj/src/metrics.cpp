// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include "splicelab/metrics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>

#include <json.hpp>

#include "splicelab/errors.hpp"
#include "splicelab/wav.hpp"

namespace splicelab {

namespace {

void split_classes(const std::vector<LabeledScore>& scores, std::vector<double>& pos,
                   std::vector<double>& neg) {
    for (const auto& s : scores) (s.spliced ? pos : neg).push_back(s.score);
    if (pos.empty() || neg.empty())
        throw InvalidArgument("metrics: need at least one score per class (have " +
                              std::to_string(pos.size()) + " spliced, " +
                              std::to_string(neg.size()) + " bona fide)");
    std::sort(pos.begin(), pos.end());
    std::sort(neg.begin(), neg.end());
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

}  // namespace

std::vector<RocPoint> roc_curve(const std::vector<LabeledScore>& scores) {
    std::vector<double> pos, neg;
    split_classes(scores, pos, neg);

    std::vector<double> all;
    all.reserve(pos.size() + neg.size());
    all.insert(all.end(), pos.begin(), pos.end());
    all.insert(all.end(), neg.begin(), neg.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());

    std::vector<RocPoint> roc;
    roc.reserve(all.size() + 1);
    // Sentinel above every score: nothing classified spliced.
    roc.push_back({all.back() + 1.0, 0.0, 0.0});
    // Descending thresholds; score >= threshold classifies as spliced.
    for (auto it = all.rbegin(); it != all.rend(); ++it) {
        const double t = *it;
        const auto n_fp = neg.end() - std::lower_bound(neg.begin(), neg.end(), t);
        const auto n_tp = pos.end() - std::lower_bound(pos.begin(), pos.end(), t);
        roc.push_back({t, static_cast<double>(n_fp) / static_cast<double>(neg.size()),
                       static_cast<double>(n_tp) / static_cast<double>(pos.size())});
    }
    return roc;
}

double compute_auc(const std::vector<LabeledScore>& scores) {
    std::vector<double> pos, neg;
    split_classes(scores, pos, neg);

    // Mann-Whitney via midranks over the pooled sample. All intermediate
    // values are small dyadic rationals, so the result matches pairwise
    // counting exactly.
    struct Item {
        double score;
        bool spliced;
    };
    std::vector<Item> pool;
    pool.reserve(pos.size() + neg.size());
    for (double s : pos) pool.push_back({s, true});
    for (double s : neg) pool.push_back({s, false});
    std::sort(pool.begin(), pool.end(), [](const Item& a, const Item& b) { return a.score < b.score; });

    double pos_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j + 1 < pool.size() && pool[j + 1].score == pool[i].score) ++j;
        // 1-based midrank of the tie group [i, j].
        const double midrank = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
        for (std::size_t k = i; k <= j; ++k)
            if (pool[k].spliced) pos_rank_sum += midrank;
        i = j + 1;
    }

    const double np = static_cast<double>(pos.size());
    const double nn = static_cast<double>(neg.size());
    return (pos_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

EerResult compute_eer(const std::vector<LabeledScore>& scores) {
    std::vector<double> pos, neg;
    split_classes(scores, pos, neg);

    std::vector<double> thresholds;
    thresholds.reserve(pos.size() + neg.size() + 1);
    thresholds.insert(thresholds.end(), pos.begin(), pos.end());
    thresholds.insert(thresholds.end(), neg.begin(), neg.end());
    std::sort(thresholds.begin(), thresholds.end());
    thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());
    thresholds.push_back(thresholds.back() + 1.0);  // nothing classified spliced

    struct Point {
        double fpr, fnr, threshold;
        std::size_t fp_count;
    };

    // Sweep ascending thresholds; at each achievable FPR keep the first
    // (lowest-FNR) operating point. This collapses the staircase corners so
    // the crossing interpolates between genuinely adjacent operating points.
    std::vector<Point> support;
    for (double t : thresholds) {
        const auto n_fp =
            static_cast<std::size_t>(neg.end() - std::lower_bound(neg.begin(), neg.end(), t));
        const auto n_fn =
            static_cast<std::size_t>(std::lower_bound(pos.begin(), pos.end(), t) - pos.begin());
        if (!support.empty() && support.back().fp_count == n_fp) continue;
        support.push_back({static_cast<double>(n_fp) / static_cast<double>(neg.size()),
                           static_cast<double>(n_fn) / static_cast<double>(pos.size()), t, n_fp});
    }

    // FPR starts at 1 (every score passes the lowest threshold) and strictly
    // decreases; FNR is non-decreasing, so fpr - fnr crosses zero exactly once.
    for (std::size_t i = 0; i < support.size(); ++i) {
        const double diff = support[i].fpr - support[i].fnr;
        if (diff > 0.0) continue;
        if (diff == 0.0 || i == 0) return {support[i].fpr, support[i].threshold};
        const Point& a = support[i - 1];
        const Point& b = support[i];
        const double da = a.fpr - a.fnr;
        const double alpha = da / (da - diff);
        return {a.fpr + alpha * (b.fpr - a.fpr), a.threshold + alpha * (b.threshold - a.threshold)};
    }
    // Unreachable: the sentinel gives fpr=0, fnr=1.
    return {support.back().fpr, support.back().threshold};
}

EvalReport evaluate_corpus(const std::filesystem::path& manifest_path, const DetectorConfig& cfg) {
    const auto rows = read_manifest(manifest_path);
    if (rows.empty()) throw ParseError("evaluate_corpus: empty manifest " + manifest_path.string());
    const auto base = manifest_path.parent_path();

    const std::int64_t n = static_cast<std::int64_t>(rows.size());
    std::vector<LabeledScore> slots(rows.size());
    std::vector<std::uint8_t> ok(rows.size(), 0);
    std::vector<std::string> errs(rows.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i)];
        try {
            const AudioBuffer x = read_wav(base / row.path);
            const DetectionScore s = score_track(x, cfg, row.path);
            slots[static_cast<std::size_t>(i)] = {row.path, s.d, row.label == "spliced"};
            ok[static_cast<std::size_t>(i)] = 1;
        } catch (const std::exception& e) {
            errs[static_cast<std::size_t>(i)] = row.path + ": " + e.what();
        }
    }

    EvalReport report;
    report.config = cfg;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (ok[i]) {
            report.scores.push_back(slots[i]);
            (slots[i].spliced ? report.n_pos : report.n_neg) += 1;
        } else {
            report.excluded += 1;
            report.excluded_tracks.push_back(errs[i]);
        }
    }

    report.auc = compute_auc(report.scores);
    const EerResult eer = compute_eer(report.scores);
    report.eer = eer.eer;
    report.eer_threshold = eer.threshold;
    report.roc = roc_curve(report.scores);
    return report;
}

namespace {

nlohmann::json band_to_json(const BandSelection& band) {
    nlohmann::json j;
    switch (band.mode) {
        case BandSelection::Mode::lowest_n:
            j["mode"] = "lowest_n";
            j["n"] = band.n;
            break;
        case BandSelection::Mode::highest_n:
            j["mode"] = "highest_n";
            j["n"] = band.n;
            break;
        case BandSelection::Mode::explicit_bins:
            j["mode"] = "explicit";
            j["bins"] = band.bins;
            break;
    }
    return j;
}

BandSelection band_from_json(const nlohmann::json& j) {
    BandSelection band;
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "lowest_n") {
        band.mode = BandSelection::Mode::lowest_n;
        band.n = j.at("n").get<std::size_t>();
    } else if (mode == "highest_n") {
        band.mode = BandSelection::Mode::highest_n;
        band.n = j.at("n").get<std::size_t>();
    } else if (mode == "explicit") {
        band.mode = BandSelection::Mode::explicit_bins;
        band.bins = j.at("bins").get<std::vector<std::size_t>>();
    } else {
        throw ParseError("report: unknown band mode '" + mode + "'");
    }
    return band;
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
    nlohmann::json j;
    j["auc"] = report.auc;
    j["eer"] = report.eer;
    j["eer_threshold"] = report.eer_threshold;
    j["n_pos"] = report.n_pos;
    j["n_neg"] = report.n_neg;
    j["excluded"] = report.excluded;
    j["excluded_tracks"] = report.excluded_tracks;
    j["config"] = {{"window", to_string(report.config.window)},
                   {"win_len", report.config.win_len},
                   {"hop", report.config.hop},
                   {"floor_db", report.config.floor_db},
                   {"band", band_to_json(report.config.band)},
                   {"trim_frames", report.config.trim_frames}};
    nlohmann::json scores = nlohmann::json::array();
    for (const auto& s : report.scores)
        scores.push_back({{"track", s.track_id}, {"d", s.score}, {"label", s.spliced ? "spliced" : "bona_fide"}});
    j["scores"] = std::move(scores);
    return j.dump(2) + "\n";
}

EvalReport report_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: bad JSON: ") + e.what());
    }
    EvalReport report;
    try {
        report.auc = j.at("auc").get<double>();
        report.eer = j.at("eer").get<double>();
        report.eer_threshold = j.at("eer_threshold").get<double>();
        report.n_pos = j.at("n_pos").get<std::size_t>();
        report.n_neg = j.at("n_neg").get<std::size_t>();
        report.excluded = j.at("excluded").get<std::size_t>();
        report.excluded_tracks = j.at("excluded_tracks").get<std::vector<std::string>>();
        const auto& c = j.at("config");
        report.config.window = window_kind_from_string(c.at("window").get<std::string>());
        report.config.win_len = c.at("win_len").get<std::size_t>();
        report.config.hop = c.at("hop").get<std::size_t>();
        report.config.floor_db = c.at("floor_db").get<double>();
        report.config.band = band_from_json(c.at("band"));
        report.config.trim_frames = c.at("trim_frames").get<std::size_t>();
        for (const auto& s : j.at("scores")) {
            report.scores.push_back({s.at("track").get<std::string>(), s.at("d").get<double>(),
                                     s.at("label").get<std::string>() == "spliced"});
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("report: missing or mistyped field: ") + e.what());
    }
    if (!report.scores.empty()) report.roc = roc_curve(report.scores);
    return report;
}

void write_report(const EvalReport& report, const std::filesystem::path& json_path) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw IoError("cannot open report for writing: " + json_path.string());
    out << report_to_json(report);
    if (!out) throw IoError("write failed: " + json_path.string());
}

void write_roc_csv(const EvalReport& report, const std::filesystem::path& csv_path) {
    std::ofstream out(csv_path, std::ios::binary);
    if (!out) throw IoError("cannot open ROC csv for writing: " + csv_path.string());
    out << "threshold,fpr,tpr\n";
    for (const auto& p : report.roc)
        out << format_double(p.threshold) << ',' << format_double(p.fpr) << ','
            << format_double(p.tpr) << "\n";
    if (!out) throw IoError("write failed: " + csv_path.string());
}

}  // namespace splicelab
