// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors
//
// Command-line driver: generate test signals, fit hidden Markov tree models,
// report complexity, denoise, select the optimal wavelet, and run logistic
// sweeps. Exit codes: 0 success, 1 usage error, 2 numerical failure.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wavecomplex/complexity.hpp"
#include "wavecomplex/denoise.hpp"
#include "wavecomplex/dwt.hpp"
#include "wavecomplex/hmt.hpp"
#include "wavecomplex/orchestrate.hpp"
#include "wavecomplex/serialize.hpp"
#include "wavecomplex/signalgen.hpp"

using namespace wavecomplex;

namespace {

Signal load_signal(const std::string& path) {
    if (path == "-") {
        return read_signal_csv(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open input file: " + path);
    }
    return read_signal_csv(in);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + path);
    }
    out << text;
}

/// Library analysis requires dyadic length; the CLI truncates with a warning
/// instead of failing. An explicit --levels truncates further.
Signal prepare_signal(Signal s, int levels_flag) {
    std::size_t n = s.size();
    if (levels_flag > 0) {
        const std::size_t want = std::size_t{1} << levels_flag;
        if (want > n) {
            throw std::runtime_error("signal shorter than 2^levels");
        }
        n = want;
    } else {
        std::size_t pow2 = 1;
        while (pow2 * 2 <= n) {
            pow2 *= 2;
        }
        n = pow2;
    }
    if (n < 4) {
        throw std::runtime_error("need at least 4 samples");
    }
    if (n != s.size()) {
        std::cerr << "warning: truncating " << s.size() << " samples to " << n << "\n";
        s.samples.resize(n);
    }
    return s;
}

struct FitFlags {
    FitConfig cfg;
    void attach(CLI::App* app) {
        app->add_option("--states", cfg.num_states, "number of hidden states")
            ->capture_default_str();
        app->add_option("--max-iter", cfg.max_iter, "EM iteration cap")
            ->capture_default_str();
        app->add_option("--tol", cfg.rel_tol, "relative log-likelihood tolerance")
            ->capture_default_str();
        app->add_option("--restarts", cfg.restarts, "independent EM restarts")
            ->capture_default_str();
        app->add_flag("--zero-mean", cfg.zero_mean, "tie all state means to zero");
        app->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();
    }
};

std::string signal_csv(const Signal& s) {
    std::ostringstream out;
    write_signal_csv(out, s);
    return out.str();
}

int run(int argc, char** argv) {
    CLI::App app{"wavelet-domain hidden Markov tree complexity toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file (flags take precedence)");

    // ---- generate ----------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "produce a test signal as CSV");
    generate->require_subcommand(1);
    std::string gen_out;
    double gen_noise = 0.0;
    std::uint64_t gen_seed = 0;
    int gen_levels = 12;
    std::size_t gen_n = 0;

    auto add_common_gen = [&](CLI::App* sub) {
        sub->add_option("--levels", gen_levels, "signal length 2^levels")
            ->capture_default_str();
        sub->add_option("--n", gen_n, "explicit sample count (overrides --levels)");
        sub->add_option("--noise-var", gen_noise, "additive white Gaussian noise variance")
            ->capture_default_str();
        sub->add_option("--seed", gen_seed, "noise seed")->capture_default_str();
        sub->add_option("--out", gen_out, "output file (default stdout)");
    };

    auto* gen_logistic = generate->add_subcommand("logistic", "logistic-map series");
    double lg_r = 3.9;
    double lg_x0 = 0.3;
    std::size_t lg_burn = 1000;
    gen_logistic->add_option("--r", lg_r, "map parameter in [0,4]")->capture_default_str();
    gen_logistic->add_option("--x0", lg_x0, "initial point in (0,1)")->capture_default_str();
    gen_logistic->add_option("--burn-in", lg_burn, "discarded iterates")
        ->capture_default_str();
    add_common_gen(gen_logistic);

    auto* gen_lorenz = generate->add_subcommand("lorenz", "Lorenz-system component");
    LorenzConfig lorenz_cfg;
    std::string lorenz_component = "y";
    gen_lorenz->add_option("--sigma", lorenz_cfg.sigma)->capture_default_str();
    gen_lorenz->add_option("--rho", lorenz_cfg.rho)->capture_default_str();
    gen_lorenz->add_option("--beta", lorenz_cfg.beta)->capture_default_str();
    gen_lorenz->add_option("--dt", lorenz_cfg.dt)->capture_default_str();
    gen_lorenz->add_option("--x", lorenz_cfg.x0)->capture_default_str();
    gen_lorenz->add_option("--y", lorenz_cfg.y0)->capture_default_str();
    gen_lorenz->add_option("--z", lorenz_cfg.z0)->capture_default_str();
    gen_lorenz->add_option("--burn-in", lorenz_cfg.burn_in)->capture_default_str();
    gen_lorenz->add_option("--component", lorenz_component, "x, y, or z")
        ->check(CLI::IsMember({"x", "y", "z"}))
        ->capture_default_str();
    add_common_gen(gen_lorenz);

    // ---- fit ---------------------------------------------------------------
    auto* fit_cmd = app.add_subcommand("fit", "fit an HMT and write the model JSON");
    std::string fit_input;
    std::string fit_wavelet = "dmey";
    std::string fit_out;
    int fit_levels = 0;
    FitFlags fit_flags;
    fit_cmd->add_option("--input", fit_input, "signal CSV ('-' for stdin)")->required();
    fit_cmd->add_option("--wavelet", fit_wavelet, "filter bank name")->capture_default_str();
    fit_cmd->add_option("--levels", fit_levels, "truncate input to 2^levels samples");
    fit_cmd->add_option("--out", fit_out, "model JSON path (default stdout)");
    fit_flags.attach(fit_cmd);

    // ---- complexity --------------------------------------------------------
    auto* cx_cmd = app.add_subcommand("complexity", "complexity report of a model or signal");
    std::string cx_model;
    std::string cx_input;
    std::string cx_wavelet = "dmey";
    std::string cx_out;
    int cx_levels = 0;
    bool cx_json = false;
    FitFlags cx_flags;
    cx_cmd->add_option("--model", cx_model, "fitted model JSON");
    cx_cmd->add_option("--input", cx_input, "signal CSV (fit first, then report)");
    cx_cmd->add_option("--wavelet", cx_wavelet, "bank used with --input")
        ->capture_default_str();
    cx_cmd->add_option("--levels", cx_levels, "truncate input to 2^levels samples");
    cx_cmd->add_flag("--json", cx_json, "emit JSON instead of CSV");
    cx_cmd->add_option("--out", cx_out, "output path (default stdout)");
    cx_flags.attach(cx_cmd);

    // ---- denoise -----------------------------------------------------------
    auto* dn_cmd = app.add_subcommand("denoise", "HMT shrinkage denoising");
    std::string dn_input;
    std::string dn_clean;
    std::string dn_wavelet = "dmey";
    std::string dn_out;
    double dn_noise = 1.0;
    int dn_levels = 0;
    FitFlags dn_flags;
    dn_cmd->add_option("--input", dn_input, "noisy signal CSV")->required();
    dn_cmd->add_option("--clean", dn_clean, "clean reference CSV (adds residual metric)");
    dn_cmd->add_option("--wavelet", dn_wavelet, "filter bank name")->capture_default_str();
    dn_cmd->add_option("--noise-var", dn_noise, "known noise variance")
        ->capture_default_str();
    dn_cmd->add_option("--levels", dn_levels, "truncate input to 2^levels samples");
    dn_cmd->add_option("--out", dn_out,
                       "denoised CSV path; JSON sidecar goes to <out>.json "
                       "(stdout mode prints the sidecar to stderr)");
    dn_flags.attach(dn_cmd);

    // ---- select ------------------------------------------------------------
    auto* sel_cmd = app.add_subcommand("select", "rank wavelets by global complexity");
    std::string sel_input;
    std::string sel_clean;
    std::string sel_wavelets = "all";
    std::string sel_out;
    std::string sel_models_dir;
    double sel_noise = 1.0;
    int sel_levels = 0;
    FitFlags sel_flags;
    sel_cmd->add_option("--input", sel_input, "signal CSV")->required();
    sel_cmd->add_option("--clean", sel_clean, "clean reference CSV");
    sel_cmd->add_option("--wavelets", sel_wavelets, "'all' or comma-separated names")
        ->capture_default_str();
    sel_cmd->add_option("--noise-var", sel_noise, "noise variance for denoising")
        ->capture_default_str();
    sel_cmd->add_option("--levels", sel_levels, "truncate input to 2^levels samples");
    sel_cmd->add_option("--models-dir", sel_models_dir,
                        "save each fitted model as <dir>/<wavelet>.json");
    sel_cmd->add_option("--out", sel_out, "ranking CSV path (default stdout)");
    sel_flags.attach(sel_cmd);

    // ---- sweep -------------------------------------------------------------
    auto* sw_cmd = app.add_subcommand("sweep", "logistic-map complexity/entropy sweep");
    SweepConfig sweep_cfg;
    double sw_rmin = 2.8;
    double sw_rmax = 4.0;
    double sw_step = 0.0001;
    std::string sw_out;
    FitFlags sw_flags;
    sw_cmd->add_option("--rmin", sw_rmin)->capture_default_str();
    sw_cmd->add_option("--rmax", sw_rmax)->capture_default_str();
    sw_cmd->add_option("--step", sw_step)->capture_default_str();
    sw_cmd->add_option("--wavelet", sweep_cfg.wavelet)->capture_default_str();
    sw_cmd->add_option("--levels", sweep_cfg.levels, "signal length 2^levels")
        ->capture_default_str();
    sw_cmd->add_option("--burn-in", sweep_cfg.burn_in)->capture_default_str();
    sw_cmd->add_option("--threads", sweep_cfg.threads,
                       "row parallelism (0 = auto; WAVECOMPLEX_THREADS caps)");
    sw_cmd->add_option("--master-seed", sweep_cfg.master_seed,
                       "per-row seeds derive from hash(master, r)")
        ->capture_default_str();
    sw_cmd->add_option("--out", sw_out, "sweep CSV path (default stdout)");
    sw_flags.attach(sw_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message
        return 1;
    }

    if (generate->parsed()) {
        const std::size_t n = gen_n > 0 ? gen_n : (std::size_t{1} << gen_levels);
        Signal s;
        if (gen_logistic->parsed()) {
            s = logistic_series(lg_r, lg_x0, n, lg_burn);
        } else {
            lorenz_cfg.n = n;
            const LorenzComponent component = lorenz_component == "x" ? LorenzComponent::x
                                              : lorenz_component == "z"
                                                  ? LorenzComponent::z
                                                  : LorenzComponent::y;
            s = lorenz_series(lorenz_cfg, component);
        }
        if (gen_noise > 0.0) {
            s = add_wgn(s, gen_noise, gen_seed);
        }
        write_text(gen_out, signal_csv(s));
        return 0;
    }

    if (fit_cmd->parsed()) {
        const Signal s = prepare_signal(load_signal(fit_input), fit_levels);
        const auto& bank = filter_bank(fit_wavelet);
        const FitResult result = fit(forward(s, bank), fit_flags.cfg);
        nlohmann::json j = model_to_json(result.params, result.posteriors.log_likelihood,
                                         fit_flags.cfg);
        j["wavelet"] = fit_wavelet;
        j["iterations"] = result.iterations;
        j["best_restart"] = result.best_restart;
        write_text(fit_out, j.dump(2) + "\n");
        return 0;
    }

    if (cx_cmd->parsed()) {
        HmtParams params;
        std::string wavelet = cx_wavelet;
        if (!cx_model.empty()) {
            std::ifstream in(cx_model);
            if (!in) {
                throw std::runtime_error("cannot open model file: " + cx_model);
            }
            nlohmann::json j = nlohmann::json::parse(in);
            params = model_from_json(j).params;
            if (j.contains("wavelet")) {
                wavelet = j["wavelet"].get<std::string>();
            }
        } else if (!cx_input.empty()) {
            const Signal s = prepare_signal(load_signal(cx_input), cx_levels);
            params = fit(forward(s, filter_bank(cx_wavelet)), cx_flags.cfg).params;
        } else {
            std::cerr << "complexity: need --model or --input\n";
            return 1;
        }
        const ComplexityReport report = complexity_report(params);
        if (cx_json) {
            nlohmann::json j = report_to_json(report);
            j["wavelet"] = wavelet;
            write_text(cx_out, j.dump(2) + "\n");
        } else {
            std::ostringstream out;
            write_report_csv(out, report, wavelet, params.num_states);
            write_text(cx_out, out.str());
        }
        return 0;
    }

    if (dn_cmd->parsed()) {
        const Signal noisy = prepare_signal(load_signal(dn_input), dn_levels);
        const auto& bank = filter_bank(dn_wavelet);
        DenoiseConfig cfg;
        cfg.noise_variance = dn_noise;
        cfg.fit = dn_flags.cfg;
        const DenoiseOutcome outcome = denoise_signal_detailed(noisy, bank, cfg);
        nlohmann::json sidecar = {
            {"wavelet", dn_wavelet},
            {"noise_variance", dn_noise},
            {"global_C_norm", complexity_report(outcome.fit.params).global_C_norm},
            {"estimator", "posterior_weighted"},
            {"zero_mean", cfg.fit.zero_mean},
        };
        if (!dn_clean.empty()) {
            Signal clean = load_signal(dn_clean);
            clean.samples.resize(noisy.size());
            sidecar["residual_energy_density"] =
                residual_energy_density(outcome.denoised, clean);
        }
        write_text(dn_out, signal_csv(outcome.denoised));
        if (dn_out.empty() || dn_out == "-") {
            std::cerr << sidecar.dump(2) << "\n";
        } else {
            write_text(dn_out + ".json", sidecar.dump(2) + "\n");
        }
        return 0;
    }

    if (sel_cmd->parsed()) {
        const Signal s = prepare_signal(load_signal(sel_input), sel_levels);
        std::optional<Signal> clean;
        if (!sel_clean.empty()) {
            clean = load_signal(sel_clean);
            clean->samples.resize(s.size());
        }
        std::vector<std::string> candidates;
        if (sel_wavelets == "all") {
            for (const auto name : wavelet_names()) {
                candidates.emplace_back(name);
            }
        } else {
            std::stringstream names(sel_wavelets);
            std::string token;
            while (std::getline(names, token, ',')) {
                if (!token.empty()) {
                    candidates.push_back(token);
                }
            }
        }
        SelectConfig cfg;
        cfg.noise_variance = sel_noise;
        cfg.fit = sel_flags.cfg;
        SelectionResult result =
            select_wavelet(s, candidates, cfg, clean ? &*clean : nullptr);
        if (!sel_models_dir.empty()) {
            for (auto& row : result.rows) {
                if (row.model) {
                    const std::string path = sel_models_dir + "/" + row.wavelet + ".json";
                    std::ofstream out(path);
                    if (out) {
                        out << model_to_json(*row.model, row.log_likelihood, cfg.fit).dump(2)
                            << "\n";
                        row.model_ref = path;
                    }
                }
            }
        }
        std::ostringstream out;
        write_selection_csv(out, result);
        write_text(sel_out, out.str());
        return 0;
    }

    if (sw_cmd->parsed()) {
        sweep_cfg.fit = sw_flags.cfg;
        const auto rows = sweep_logistic(sw_rmin, sw_rmax, sw_step, sweep_cfg);
        std::ostringstream out;
        write_sweep_csv(out, rows);
        write_text(sw_out, out.str());
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError&) {
        return 1;  // CLI11_PARSE already printed the message
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
