// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/spectrogram_io.hpp"
#include "splicelab/synth.hpp"
#include "splicelab/wav.hpp"

namespace splicelab::cli {

double parse_phase(const std::string& text) {
    if (text == "pi") return std::numbers::pi;
    if (text == "-pi") return -std::numbers::pi;
    if (text == "pi/2") return std::numbers::pi / 2.0;
    if (text == "2pi") return 2.0 * std::numbers::pi;
    double v{};
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw InvalidArgument("--phase: expected radians or pi/pi2 token, got '" + text + "'");
    return v;
}

namespace {

void write_waveform_csv(const std::filesystem::path& path, const AudioBuffer& x) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string());
    out << "n,t_s,amplitude\n";
    char buf[32];
    for (std::size_t n = 0; n < x.size(); ++n) {
        auto [p1, e1] = std::to_chars(buf, buf + sizeof(buf),
                                      static_cast<double>(n) / x.sample_rate);
        out << n << ',' << std::string(buf, p1) << ',';
        auto [p2, e2] = std::to_chars(buf, buf + sizeof(buf), x.samples[n]);
        (void)e1;
        (void)e2;
        out << std::string(buf, p2) << "\n";
    }
}

void export_all(const GlobalOptions& g, const std::string& stem, const AudioBuffer& x,
                const Spectrogram& spec, const std::vector<double>& splice_times) {
    std::filesystem::create_directories(g.out());
    write_waveform_csv(g.out() / (stem + "_waveform.csv"), x);
    write_wav(g.out() / (stem + ".wav"), x, {WavFormat::Encoding::float32, 0});

    SpectrogramExport csv;
    csv.format = SpectrogramExport::Format::csv;
    csv.splice_times_s = splice_times;
    export_spectrogram(spec, csv, g.out() / (stem + "_spectrogram.csv"));

    SpectrogramExport pgm;
    pgm.format = SpectrogramExport::Format::pgm8;
    pgm.splice_times_s = splice_times;
    // Map the image around the observed peak.
    double peak = spec.floor_db;
    for (double v : spec.values_db) peak = std::max(peak, v);
    pgm.max_db = peak;
    pgm.min_db = peak - 120.0;
    export_spectrogram(spec, pgm, g.out() / (stem + "_spectrogram.pgm"));
    log_info(g, "wrote " + stem + "_waveform.csv, " + stem + ".wav, " + stem +
                    "_spectrogram.{csv,pgm}(+.json) in " + g.out().string());
}

}  // namespace

int cmd_demo_leakage(const GlobalOptions& g, double f0, int fs, std::size_t win, std::size_t hop,
                     std::size_t duration) {
    log_config(g, "demo leakage: f0=" + std::to_string(f0) + " fs=" + std::to_string(fs) +
                      " win=" + std::to_string(win) + " hop=" + std::to_string(hop) +
                      " dur=" + std::to_string(duration));
    SinusoidSpec spec;
    spec.f0_hz = f0;
    spec.sample_rate = fs;
    spec.duration = duration;
    const AudioBuffer x = synth_sinusoid(spec);
    const Spectrogram sg = stft_db(x, make_window(WindowKind::rectangular, win), hop);
    export_all(g, "leakage_win" + std::to_string(win), x, sg, {});
    return kExitOk;
}

int cmd_demo_splice(const GlobalOptions& g, const std::string& scenario, double f0, int fs,
                    double amplitude, double amplitude2, const std::string& phase, std::size_t n1,
                    std::size_t n2, const std::string& window, std::size_t win, std::size_t hop) {
    ConcatScenario sc;
    if (scenario == "identical") sc = ConcatScenario::identical;
    else if (scenario == "phase") sc = ConcatScenario::phase_shift;
    else if (scenario == "amplitude") sc = ConcatScenario::amplitude_change;
    else throw InvalidArgument("--scenario must be identical | phase | amplitude, got '" + scenario + "'");

    log_config(g, "demo splice: scenario=" + scenario + " f0=" + std::to_string(f0) +
                      " n1=" + std::to_string(n1) + " win=" + std::to_string(win));

    SinusoidSpec first;
    first.f0_hz = f0;
    first.sample_rate = fs;
    first.amplitude = amplitude;
    first.duration = n1;
    const ConcatSpec spec =
        make_scenario(first, sc, parse_phase(phase), amplitude2, n2 == 0 ? n1 : n2);

    AnalysisParams analysis;
    analysis.window = window_kind_from_string(window);
    analysis.win_len = win;
    analysis.hop = hop;
    const DemoResult res = demo_scenario(spec, analysis);

    // Both index conventions: 0-based internally, 1-based as in the usual
    // "splice at N1 + 1" phrasing.
    log_info(g, "splice point: sample " + std::to_string(res.splice_point) + " (0-based), " +
                    std::to_string(res.splice_point + 1) + " (1-based)");
    export_all(g, "splice_" + scenario, res.signal, res.spectrogram,
               {static_cast<double>(res.splice_point) / fs});
    return kExitOk;
}

}  // namespace splicelab::cli
