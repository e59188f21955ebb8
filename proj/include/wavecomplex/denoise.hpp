// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include "wavecomplex/dwt.hpp"
#include "wavecomplex/hmt.hpp"
#include "wavecomplex/signal.hpp"

namespace wavecomplex {

struct DenoiseConfig {
    double noise_variance = 1.0;  ///< known noise power, >= 0
    FitConfig fit;
};

/// Posterior-weighted Wiener-style shrinkage with positive-part variance
/// subtraction:
///   d_hat = sum_m gamma_i(m) [mu_jm + (sigma_jm^2 - nv)_+ / sigma_jm^2 (d - mu_jm)]
/// States whose variance is at or below the noise variance contribute only
/// their mean; u0 passes through unchanged. Throws std::invalid_argument if
/// params/posteriors shapes disagree with the tree.
WaveletTree shrink_tree(const WaveletTree& t, const HmtParams& params,
                        const Posteriors& post, double noise_variance);

/// forward -> fit -> shrink_tree -> inverse; deterministic given cfg.fit.seed.
Signal denoise_signal(const Signal& s, const WaveletFilterBank& bank,
                      const DenoiseConfig& cfg);

/// Denoise and keep the fitted model (one fit serves both the estimate and
/// any complexity reporting).
struct DenoiseOutcome {
    Signal denoised;
    FitResult fit;
};
DenoiseOutcome denoise_signal_detailed(const Signal& s, const WaveletFilterBank& bank,
                                       const DenoiseConfig& cfg);

/// Mean squared difference (1/N) sum (denoised - clean)^2; the "remaining
/// noise" metric. Throws std::invalid_argument on length mismatch.
double residual_energy_density(const Signal& denoised, const Signal& clean);

}  // namespace wavecomplex
