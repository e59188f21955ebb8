// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/orchestrate.hpp"

#include <atomic>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "wavecomplex/dwt.hpp"
#include "wavecomplex/rng.hpp"
#include "wavecomplex/signalgen.hpp"

namespace wavecomplex {

SelectionResult select_wavelet(const Signal& s, std::span<const std::string> candidates,
                               const SelectConfig& cfg, const Signal* clean) {
    if (candidates.empty()) {
        throw std::invalid_argument("select_wavelet: candidate list is empty");
    }
    SelectionResult result;
    result.rows.reserve(candidates.size());
    for (const auto& name : candidates) {
        SelectionRow row;
        row.wavelet = name;
        row.residual_energy_density = std::nan("");
        try {
            const WaveletFilterBank& bank = filter_bank(name);
            const WaveletTree tree = forward(s, bank);
            FitResult fitted = fit(tree, cfg.fit);
            row.global_C_norm = complexity_report(fitted.params).global_C_norm;
            row.log_likelihood = fitted.posteriors.log_likelihood;
            if (clean != nullptr) {
                const WaveletTree shrunk = shrink_tree(
                    tree, fitted.params, fitted.posteriors, cfg.noise_variance);
                row.residual_energy_density =
                    residual_energy_density(inverse(shrunk, bank), *clean);
            }
            row.model = std::move(fitted.params);
        } catch (const std::exception& e) {
            row.status = e.what();
        }
        result.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto& row = result.rows[i];
        if (row.status != "ok") {
            continue;
        }
        if (result.winner_index < 0 ||
            row.global_C_norm >
                result.rows[static_cast<std::size_t>(result.winner_index)].global_C_norm) {
            result.winner_index = static_cast<int>(i);
        }
    }
    if (result.winner_index >= 0) {
        result.rows[static_cast<std::size_t>(result.winner_index)].winner = true;
    }
    return result;
}

namespace {

unsigned resolve_threads(unsigned requested, std::size_t rows) {
    unsigned threads = requested;
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (const char* env = std::getenv("WAVECOMPLEX_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) {
            threads = std::min(threads, static_cast<unsigned>(cap));
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(rows, 1)));
}

std::uint64_t row_seed(std::uint64_t master, double r) {
    return Rng::mix(master, std::bit_cast<std::uint64_t>(r));
}

}  // namespace

std::vector<SweepRow> sweep_logistic(double r_min, double r_max, double step,
                                     const SweepConfig& cfg) {
    if (!(r_min >= 0.0 && r_min < r_max && r_max <= 4.0) || !(step > 0.0)) {
        throw std::invalid_argument("sweep_logistic: need 0 <= r_min < r_max <= 4 and step > 0");
    }
    if (cfg.levels < 2) {
        throw std::invalid_argument("sweep_logistic: levels must be >= 2");
    }
    const WaveletFilterBank& bank = filter_bank(cfg.wavelet);
    const std::size_t n = std::size_t{1} << cfg.levels;

    std::vector<double> r_values;
    for (double r = r_min; r <= r_max + step * 0.5; r += step) {
        r_values.push_back(std::min(r, r_max));
    }

    std::vector<SweepRow> rows(r_values.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= r_values.size()) {
                return;
            }
            const double r = r_values[idx];
            SweepRow& row = rows[idx];
            row.r = r;
            try {
                const std::uint64_t seed = row_seed(cfg.master_seed, r);
                Rng rng(seed);
                const double x0 = rng.uniform(0.1, 0.9);
                const Signal series = logistic_series(r, x0, n, cfg.burn_in);
                FitConfig fit_cfg = cfg.fit;
                fit_cfg.seed = seed;
                const FitResult fitted = fit(forward(series, bank), fit_cfg);
                const ComplexityReport report = complexity_report(fitted.params);
                row.global_C_norm = report.global_C_norm;
                row.entropy_rate_norm = report.entropy_rate_norm;
                row.monotone_run = report.monotone_run;
            } catch (const std::exception& e) {
                row.status = e.what();
            }
        }
    };

    const unsigned threads = resolve_threads(cfg.threads, r_values.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    return rows;
}

}  // namespace wavecomplex
