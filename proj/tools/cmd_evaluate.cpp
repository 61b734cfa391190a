// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <map>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/metrics.hpp"

namespace splicelab::cli {

namespace {

std::string summary_line(const EvalReport& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "AUC %.1f EER %.1f", 100.0 * r.auc, 100.0 * r.eer);
    return buf;
}

EvalReport evaluate_one(const GlobalOptions& g, const std::filesystem::path& manifest,
                        const DetectorConfig& cfg, const std::filesystem::path& report_path) {
    const EvalReport report = evaluate_corpus(manifest, cfg);
    std::filesystem::create_directories(report_path.parent_path().empty()
                                            ? std::filesystem::path(".")
                                            : report_path.parent_path());
    write_report(report, report_path);
    std::filesystem::path roc = report_path;
    roc.replace_extension(".roc.csv");
    write_roc_csv(report, roc);
    log_info(g, "report: " + report_path.string() + " (n_pos=" + std::to_string(report.n_pos) +
                    " n_neg=" + std::to_string(report.n_neg) +
                    " excluded=" + std::to_string(report.excluded) + ")");
    return report;
}

}  // namespace

int cmd_evaluate(const GlobalOptions& g, const std::string& manifest, bool grid,
                 const DetectorFlags& flags, const std::string& report_path) {
    const DetectorConfig cfg = flags.resolve();

    if (!grid) {
        log_config(g, "evaluate: " + manifest);
        const std::filesystem::path out_json =
            report_path.empty() ? g.out() / "report.json" : std::filesystem::path(report_path);
        const EvalReport report = evaluate_one(g, manifest, cfg, out_json);
        std::cout << summary_line(report) << "\n";
        return kExitOk;
    }

    // Grid mode: every <subdir>/manifest.csv under the given directory.
    log_config(g, "evaluate --grid: " + manifest);
    std::vector<std::filesystem::path> manifests;
    for (const auto& entry : std::filesystem::directory_iterator(manifest))
        if (entry.is_directory() && std::filesystem::exists(entry.path() / "manifest.csv"))
            manifests.push_back(entry.path() / "manifest.csv");
    std::sort(manifests.begin(), manifests.end());
    if (manifests.empty())
        throw InvalidArgument("evaluate --grid: no */manifest.csv under " + manifest);

    std::filesystem::create_directories(g.out());
    // name -> (auc%, eer%) for the pivot table.
    std::map<std::string, std::pair<double, double>> results;
    for (const auto& m : manifests) {
        const std::string name = m.parent_path().filename().string();
        const EvalReport report = evaluate_one(g, m, cfg, g.out() / (name + ".report.json"));
        results[name] = {100.0 * report.auc, 100.0 * report.eer};
        std::cout << name << " " << summary_line(report) << "\n";
    }

    // Pivot when the sub-corpora follow the ola<W>_<config> naming.
    const std::vector<std::string> col_order = {"clean", "snr60", "snr50", "snr46", "snr40",
                                                "highpass"};
    std::map<std::size_t, std::map<std::string, double>> table;
    bool pivot = !results.empty();
    for (const auto& [name, metrics] : results) {
        const auto us = name.find('_');
        if (name.rfind("ola", 0) != 0 || us == std::string::npos) {
            pivot = false;
            break;
        }
        table[std::stoul(name.substr(3, us - 3))][name.substr(us + 1)] = metrics.first;
    }
    if (pivot) {
        std::cout << "\nAUC (%) by OLA window and post-processing:\n";
        std::printf("%8s", "OLA");
        for (const auto& c : col_order) std::printf(" %9s", c.c_str());
        std::printf("\n");
        for (const auto& [w, row] : table) {
            std::printf("%8zu", w);
            for (const auto& c : col_order) {
                const auto it = row.find(c);
                if (it == row.end()) std::printf(" %9s", "-");
                else std::printf(" %9.2f", it->second);
            }
            std::printf("\n");
        }
    }
    return kExitOk;
}

}  // namespace splicelab::cli
