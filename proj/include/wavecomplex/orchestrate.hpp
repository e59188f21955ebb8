// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wavecomplex/complexity.hpp"
#include "wavecomplex/denoise.hpp"
#include "wavecomplex/hmt.hpp"
#include "wavecomplex/signal.hpp"

namespace wavecomplex {

struct SelectionRow {
    std::string wavelet;
    double global_C_norm = 0.0;
    double residual_energy_density = 0.0;  ///< NaN when no clean reference
    bool winner = false;
    std::string status = "ok";             ///< error text for failed fits
    std::optional<HmtParams> model;
    double log_likelihood = 0.0;
    std::string model_ref;                 ///< path of a saved model, if any
};

struct SelectConfig {
    double noise_variance = 1.0;
    FitConfig fit;
};

struct SelectionResult {
    std::vector<SelectionRow> rows;  ///< in candidate order
    int winner_index = -1;           ///< -1 when every candidate failed
};

/// Fits one HMT per candidate bank on s and ranks by normalized global
/// complexity (ties keep candidate order). With a clean reference the rows
/// also carry the remaining-noise metric of the matching denoiser run.
SelectionResult select_wavelet(const Signal& s, std::span<const std::string> candidates,
                               const SelectConfig& cfg, const Signal* clean = nullptr);

struct SweepRow {
    double r = 0.0;
    double global_C_norm = 0.0;
    double entropy_rate_norm = 0.0;
    int monotone_run = 0;
    std::string status = "ok";
};

struct SweepConfig {
    int levels = 12;             ///< signal length 2^levels
    std::size_t burn_in = 1000;
    std::string wavelet = "bior1.3";
    FitConfig fit;
    std::uint64_t master_seed = 0;
    unsigned threads = 0;        ///< 0 = hardware concurrency; WAVECOMPLEX_THREADS caps
};

/// Logistic-map sweep over r in [r_min, r_max] with the given step. Each row
/// is independently reproducible: its seed is derived from (master_seed, r).
/// Failed fits are recorded in the status column and do not abort the sweep.
std::vector<SweepRow> sweep_logistic(double r_min, double r_max, double step,
                                     const SweepConfig& cfg);

}  // namespace wavecomplex
