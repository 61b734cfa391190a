// splicelab: splicing-artifact analysis and corpus forging toolkit
// Copyright (c) 2026 the splicelab authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "common.hpp"
#include "splicelab/errors.hpp"
#include "splicelab/parallel.hpp"

using namespace splicelab;
using namespace splicelab::cli;

int main(int argc, char** argv) {
    CLI::App app{"splicelab: detect, generate, and mitigate splicing artifacts in audio"};
    app.require_subcommand(1);

    GlobalOptions g;
    const char* env_out = std::getenv("SPLICELAB_OUT");
    g.out_dir = env_out != nullptr ? env_out : ".";
    app.add_option("--seed", g.seed, "Base RNG seed for anything randomized");
    app.add_option("--threads", g.threads, "Worker threads (0 = all available)");
    app.add_flag("--quiet", g.quiet, "Suppress progress logging on stderr");
    app.add_option("--out", g.out_dir,
                   "Output directory (default: $SPLICELAB_OUT or the working directory)");

    // demo leakage
    auto* demo = app.add_subcommand("demo", "Reproduce the sinusoid demonstrations");
    demo->require_subcommand(1);
    auto* leak = demo->add_subcommand("leakage", "Single sinusoid under matched/mismatched windows");
    double lk_f0 = 800.0;
    int lk_fs = 16000;
    std::size_t lk_win = 80, lk_hop = 0, lk_dur = 16000;
    leak->add_option("--f0", lk_f0, "Sinusoid frequency in Hz")->capture_default_str();
    leak->add_option("--fs", lk_fs, "Sample rate in Hz")->capture_default_str();
    leak->add_option("--win", lk_win, "Analysis window length in samples (80 = matched, 88 = leaky)")
        ->capture_default_str();
    leak->add_option("--hop", lk_hop, "Hop in samples (default: window length)");
    leak->add_option("--dur", lk_dur, "Signal duration in samples")->capture_default_str();

    // demo splice
    auto* spl = demo->add_subcommand("splice", "Two concatenated sinusoids in different setups");
    std::string sp_scenario = "phase";
    double sp_f0 = 800.0, sp_amp = 1.0, sp_amp2 = 0.5;
    int sp_fs = 16000;
    std::string sp_phase = "pi";
    std::size_t sp_n1 = 4010, sp_n2 = 0, sp_win = 80, sp_hop = 40;
    std::string sp_window = "rect";
    spl->add_option("--scenario", sp_scenario, "identical | phase | amplitude")->capture_default_str();
    spl->add_option("--f0", sp_f0, "Fundamental in Hz")->capture_default_str();
    spl->add_option("--fs", sp_fs, "Sample rate in Hz")->capture_default_str();
    spl->add_option("--amp", sp_amp, "First segment amplitude")->capture_default_str();
    spl->add_option("--amp2", sp_amp2, "Second segment amplitude (amplitude scenario)")
        ->capture_default_str();
    spl->add_option("--phase", sp_phase, "Phase offset in radians; accepts pi, pi/2, 2pi")
        ->capture_default_str();
    spl->add_option("--n1", sp_n1, "First segment length in samples")->capture_default_str();
    spl->add_option("--n2", sp_n2, "Second segment length (default: same as --n1)");
    spl->add_option("--window", sp_window, "Analysis window kind: rect | hann")->capture_default_str();
    spl->add_option("--win", sp_win, "Analysis window length")->capture_default_str();
    spl->add_option("--hop", sp_hop, "Analysis hop")->capture_default_str();

    // spectrogram
    auto* sg = app.add_subcommand("spectrogram", "Export a dB spectrogram of a WAV file");
    std::string sg_wav;
    std::size_t sg_win = 2048, sg_hop = 256;
    std::string sg_window = "hann", sg_exports = "csv,pgm8";
    double sg_floor = -300.0, sg_min = -120.0, sg_max = 0.0;
    std::string sg_labels, sg_dialect = "native", sg_track;
    sg->add_option("wav", sg_wav, "Input WAV file")->required();
    sg->add_option("--win", sg_win, "STFT window length in samples")->capture_default_str();
    sg->add_option("--hop", sg_hop, "STFT hop in samples")->capture_default_str();
    sg->add_option("--window", sg_window, "rect | hann | hann_symmetric")->capture_default_str();
    sg->add_option("--export", sg_exports, "Comma list of csv,pgm8")->capture_default_str();
    sg->add_option("--floor-db", sg_floor, "dB floor substituted for zero magnitude")
        ->capture_default_str();
    sg->add_option("--min-db", sg_min, "pgm8: dB mapped to black")->capture_default_str();
    sg->add_option("--max-db", sg_max, "pgm8: dB mapped to white")->capture_default_str();
    sg->add_option("--labels", sg_labels, "Segment label file to overlay splice timestamps");
    sg->add_option("--dialect", sg_dialect, "native | partialspoof | had")->capture_default_str();
    sg->add_option("--track", sg_track, "Track id inside the label file (default: match by stem)");

    // detect
    auto* det = app.add_subcommand("detect", "Score tracks by quiet-band dynamic range");
    std::string det_input, det_scores;
    DetectorFlags det_flags;
    det->add_option("input", det_input, "WAV file or manifest.csv")->required();
    det->add_option("--preset", det_flags.preset, "partialspoof | had");
    det->add_option("--window", det_flags.window, "rect | hann | hann_symmetric")->capture_default_str();
    det->add_option("--win", det_flags.win, "STFT window length")->capture_default_str();
    det->add_option("--hop", det_flags.hop, "STFT hop (default: win/4)");
    det->add_option("--floor-db", det_flags.floor_db, "dB floor")->capture_default_str();
    det->add_option("--band", det_flags.band_mode, "lowest | highest | explicit")->capture_default_str();
    det->add_option("--band-n", det_flags.band_n, "Number of bins for lowest/highest")
        ->capture_default_str();
    det->add_option("--bins", det_flags.bins, "Comma-separated bin list for --band explicit");
    det->add_option("--trim", det_flags.trim, "Frames dropped from each end before max-min")
        ->capture_default_str();
    det->add_option("--scores", det_scores, "Write the score CSV here instead of stdout");

    // forge
    auto* fg = app.add_subcommand("forge", "Build a labeled spliced corpus from source tracks");
    std::string fg_real, fg_fake;
    std::size_t fg_count = 100, fg_ola = 256;
    double fg_snr = 0.0;
    bool fg_highpass = false, fg_highpass_bona = false, fg_float32 = false, fg_grid = false;
    double fg_vad_thr = -40.0, fg_vad_frame = 20.0, fg_vad_hop = 10.0, fg_vad_min = 60.0;
    fg->add_option("--real", fg_real, "Directory of real source WAVs")->required();
    fg->add_option("--fake", fg_fake, "Directory of fake source WAVs")->required();
    fg->add_option("--count", fg_count, "Spliced tracks per corpus (same number of bona fide)")
        ->capture_default_str();
    fg->add_option("--ola-window", fg_ola, "Hann crossfade length: 256|512|1024|2048|4096")
        ->capture_default_str();
    auto* snr_opt = fg->add_option("--snr-db", fg_snr, "Inject low-band noise at this SNR (60|50|46|40)");
    fg->add_flag("--highpass", fg_highpass, "High-pass the spliced tracks (order 8, 100 Hz)");
    fg->add_flag("--highpass-bona-fide", fg_highpass_bona, "Also high-pass the bona fide tracks");
    fg->add_flag("--float32", fg_float32, "Write float32 WAVs instead of pcm16");
    fg->add_flag("--grid", fg_grid, "Emit all 30 OLA x post-processing sub-corpora");
    fg->add_option("--vad-threshold-db", fg_vad_thr, "VAD silence threshold relative to track RMS")
        ->capture_default_str();
    fg->add_option("--vad-frame-ms", fg_vad_frame, "VAD frame length in ms")->capture_default_str();
    fg->add_option("--vad-hop-ms", fg_vad_hop, "VAD hop in ms")->capture_default_str();
    fg->add_option("--vad-min-region-ms", fg_vad_min, "Minimum usable silence length in ms")
        ->capture_default_str();

    // evaluate
    auto* ev = app.add_subcommand("evaluate", "Score a corpus and report ROC/AUC/EER");
    std::string ev_manifest, ev_report;
    bool ev_grid = false;
    DetectorFlags ev_flags;
    ev_flags.preset = "partialspoof";
    ev->add_option("manifest", ev_manifest, "manifest.csv, or a directory with --grid")->required();
    ev->add_flag("--grid", ev_grid, "Evaluate every */manifest.csv under the given directory");
    ev->add_option("--preset", ev_flags.preset, "partialspoof | had")->capture_default_str();
    ev->add_option("--window", ev_flags.window, "rect | hann | hann_symmetric");
    ev->add_option("--win", ev_flags.win, "STFT window length");
    ev->add_option("--hop", ev_flags.hop, "STFT hop (default: win/4)");
    ev->add_option("--floor-db", ev_flags.floor_db, "dB floor");
    ev->add_option("--band", ev_flags.band_mode, "lowest | highest | explicit");
    ev->add_option("--band-n", ev_flags.band_n, "Number of bins for lowest/highest");
    ev->add_option("--bins", ev_flags.bins, "Comma-separated bin list");
    ev->add_option("--trim", ev_flags.trim, "Frames trimmed from each end");
    ev->add_option("--report", ev_report, "Report JSON path (default: <out>/report.json)");

    // synth-hosts
    auto* sh = app.add_subcommand("synth-hosts",
                                  "Generate synthetic speech-like host tracks for experiments");
    std::size_t sh_count = 100;
    double sh_dur = 4.0;
    sh->add_option("--count", sh_count, "Number of hosts")->capture_default_str();
    sh->add_option("--duration", sh_dur, "Host duration in seconds")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    set_threads(g.threads);

    try {
        if (leak->parsed())
            return cmd_demo_leakage(g, lk_f0, lk_fs, lk_win, lk_hop == 0 ? lk_win : lk_hop, lk_dur);
        if (spl->parsed())
            return cmd_demo_splice(g, sp_scenario, sp_f0, sp_fs, sp_amp, sp_amp2, sp_phase, sp_n1,
                                   sp_n2, sp_window, sp_win, sp_hop);
        if (sg->parsed())
            return cmd_spectrogram(g, sg_wav, sg_win, sg_hop, sg_window, sg_exports, sg_floor,
                                   sg_min, sg_max, sg_labels, sg_dialect, sg_track);
        if (det->parsed()) return cmd_detect(g, det_input, det_flags, det_scores);
        if (fg->parsed())
            return cmd_forge(g, fg_real, fg_fake, fg_count, fg_ola, fg_snr, snr_opt->count() > 0,
                             fg_highpass, fg_highpass_bona, fg_float32, fg_grid, fg_vad_thr,
                             fg_vad_frame, fg_vad_hop, fg_vad_min);
        if (ev->parsed()) return cmd_evaluate(g, ev_manifest, ev_grid, ev_flags, ev_report);
        if (sh->parsed()) return cmd_synth_hosts(g, sh_count, sh_dur);
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
