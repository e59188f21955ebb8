// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <cstdint>
#include <vector>

#include "wavecomplex/wavelet_tree.hpp"

namespace wavecomplex {

/// Hidden Markov tree parameters with per-scale tying: one root state pmf,
/// one transition matrix per scale j = 1..J-1 (row m = parent state,
/// column n = child state), and one mean/variance pair per (scale, state).
/// State 0 is "yin" (small coefficients), state 1 "yang" (large); after
/// fitting, states are ordered by increasing variance at the finest scale.
struct HmtParams {
    int levels = 0;      ///< J
    int num_states = 2;  ///< M
    std::vector<double> root_pmf;               ///< size M
    std::vector<std::vector<double>> trans;     ///< (J-1) row-major M*M; trans[j-1] for scale j
    std::vector<std::vector<double>> means;     ///< J vectors of size M
    std::vector<std::vector<double>> variances; ///< J vectors of size M

    double trans_at(int scale, int parent_state, int child_state) const {
        return trans[scale - 1][parent_state * num_states + child_state];
    }

    /// Throws std::invalid_argument when shapes or stochasticity invariants
    /// are violated (pmf/rows must sum to 1 within 1e-9, variances > 0).
    void validate() const;
};

/// Exact posterior state probabilities of a fitted tree, plus the model
/// log-likelihood in nats. marginal[j] is row-major 2^j x M; pairwise[j]
/// (for j >= 1) is row-major 2^j x M x M with [parent_state][child_state].
struct Posteriors {
    int levels = 0;
    int num_states = 2;
    std::vector<std::vector<double>> marginal;
    std::vector<std::vector<double>> pairwise;
    double log_likelihood = 0.0;

    double gamma(int scale, std::size_t pos, int state) const {
        return marginal[scale][pos * num_states + state];
    }
    double xi(int scale, std::size_t pos, int parent_state, int child_state) const {
        return pairwise[scale][(pos * num_states + parent_state) * num_states + child_state];
    }
};

struct FitConfig {
    int num_states = 2;
    int max_iter = 200;
    double rel_tol = 1e-6;   ///< relative log-likelihood change threshold
    int restarts = 1;
    double variance_floor = 1e-12;      ///< absolute lower bound
    double variance_floor_rel = 1e-6;   ///< times per-scale coefficient variance
    bool zero_mean = false;
    std::uint64_t seed = 0;

    void validate() const;  ///< throws std::invalid_argument
};

struct FitResult {
    HmtParams params;
    Posteriors posteriors;                    ///< e-step of the returned params
    std::vector<double> log_likelihood_trace; ///< nats, one entry per e-step
    int best_restart = 0;
    int iterations = 0;
};

/// Percentile-split initialization: per scale, coefficients above the 75th
/// magnitude percentile are labeled yang, the rest yin; means/variances come
/// from the labeled groups and root pmf / transitions from label frequencies
/// and parent-child co-occurrence with 0.5 pseudo-counts. Restarts > 0
/// perturb the percentile via the seed.
HmtParams init_params(const WaveletTree& t, const FitConfig& cfg, int restart = 0);

/// Exact E-step via the scaled upward-downward tree recursion. Every
/// intermediate is normalized per node, so no log-domain arithmetic is
/// needed; the log-likelihood is accumulated from the normalizers.
/// Throws std::runtime_error only if a per-node normalizer vanishes.
Posteriors e_step(const WaveletTree& t, const HmtParams& params);

/// Tied M-step updates; variances are clamped to
/// max(variance_floor_rel * per-scale coefficient variance, variance_floor).
HmtParams m_step(const WaveletTree& t, const Posteriors& post, const FitConfig& cfg);

/// Full EM fit with restarts; returns the highest-likelihood fit (ties break
/// toward the lowest restart index). The returned trace is non-decreasing up
/// to 1e-9 slack and the returned posteriors correspond to the returned
/// parameters.
FitResult fit(const WaveletTree& t, const FitConfig& cfg);

}  // namespace wavecomplex
