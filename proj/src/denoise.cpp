// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/denoise.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavecomplex {

WaveletTree shrink_tree(const WaveletTree& t, const HmtParams& params,
                        const Posteriors& post, double noise_variance) {
    if (!(noise_variance >= 0.0)) {
        throw std::invalid_argument("shrink_tree: noise variance must be >= 0");
    }
    if (!t.well_formed() || params.levels != t.levels || post.levels != t.levels ||
        params.num_states != post.num_states) {
        throw std::invalid_argument("shrink_tree: tree/params/posteriors shape mismatch");
    }
    const int M = params.num_states;
    WaveletTree out = t;  // u0 passes through unchanged
    for (int j = 0; j < t.levels; ++j) {
        // clean-signal variance estimate per state: positive part of
        // (fitted variance - noise variance); the Wiener gain sends
        // sub-noise states to their common mean value
        std::vector<double> gain(M);
        for (int m = 0; m < M; ++m) {
            const double var = params.variances[j][m];
            gain[m] = std::max(var - noise_variance, 0.0) / var;
        }
        const auto& d = t.details[j];
        for (std::size_t k = 0; k < d.size(); ++k) {
            double estimate = 0.0;
            for (int m = 0; m < M; ++m) {
                const double mu = params.means[j][m];
                estimate += post.gamma(j, k, m) * (mu + gain[m] * (d[k] - mu));
            }
            out.details[j][k] = estimate;
        }
    }
    return out;
}

DenoiseOutcome denoise_signal_detailed(const Signal& s, const WaveletFilterBank& bank,
                                       const DenoiseConfig& cfg) {
    const WaveletTree noisy = forward(s, bank);
    DenoiseOutcome outcome;
    outcome.fit = fit(noisy, cfg.fit);
    const WaveletTree shrunk =
        shrink_tree(noisy, outcome.fit.params, outcome.fit.posteriors, cfg.noise_variance);
    outcome.denoised = inverse(shrunk, bank);
    return outcome;
}

Signal denoise_signal(const Signal& s, const WaveletFilterBank& bank,
                      const DenoiseConfig& cfg) {
    return denoise_signal_detailed(s, bank, cfg).denoised;
}

double residual_energy_density(const Signal& denoised, const Signal& clean) {
    if (denoised.size() != clean.size() || denoised.empty()) {
        throw std::invalid_argument("residual_energy_density: length mismatch");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < denoised.size(); ++i) {
        const double diff = denoised[i] - clean[i];
        acc += diff * diff;
    }
    return acc / static_cast<double>(denoised.size());
}

}  // namespace wavecomplex
