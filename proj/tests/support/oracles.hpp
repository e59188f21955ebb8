// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors
//
// Test-only oracles, kept independent of the implementation paths they
// check: posterior enumeration, the chain-rule entropy form, and random
// model/tree generators.

#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wavecomplex/hmt.hpp"
#include "wavecomplex/rng.hpp"
#include "wavecomplex/wavelet_tree.hpp"

namespace wavecomplex::testing {

struct BruteForcePosteriors {
    std::vector<std::vector<double>> marginal;  // same layout as Posteriors
    std::vector<std::vector<double>> pairwise;
    double log_likelihood = 0.0;
};

/// Exact posteriors by summing the joint density over every state
/// configuration (M^(2^J-1) of them).
inline BruteForcePosteriors brute_force_posteriors(const WaveletTree& t,
                                                   const HmtParams& params) {
    const int J = t.levels;
    const int M = params.num_states;
    const std::size_t nodes = t.node_count();
    std::size_t total = 1;
    for (std::size_t i = 0; i < nodes; ++i) {
        total *= static_cast<std::size_t>(M);
    }

    BruteForcePosteriors out;
    out.marginal.resize(J);
    out.pairwise.resize(J);
    for (int j = 0; j < J; ++j) {
        out.marginal[j].assign((std::size_t{1} << j) * M, 0.0);
        if (j >= 1) {
            out.pairwise[j].assign((std::size_t{1} << j) * M * M, 0.0);
        }
    }

    std::vector<int> state(nodes + 1, 0);
    double evidence = 0.0;
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t rest = c;
        for (std::size_t i = 1; i <= nodes; ++i) {
            state[i] = static_cast<int>(rest % M);
            rest /= M;
        }
        double p = params.root_pmf[state[1]];
        for (std::size_t i = 2; i <= nodes; ++i) {
            p *= params.trans[scale_of_index(i) - 1][state[i / 2] * M + state[i]];
        }
        for (std::size_t i = 1; i <= nodes; ++i) {
            const int j = scale_of_index(i);
            const std::size_t k = pos_of_index(i);
            const double d = t.details[j][k];
            const double mu = params.means[j][state[i]];
            const double var = params.variances[j][state[i]];
            p *= std::exp(-0.5 * (d - mu) * (d - mu) / var) /
                 std::sqrt(2.0 * M_PI * var);
        }
        evidence += p;
        for (std::size_t i = 1; i <= nodes; ++i) {
            const int j = scale_of_index(i);
            const std::size_t k = pos_of_index(i);
            out.marginal[j][k * M + state[i]] += p;
            if (i >= 2) {
                out.pairwise[j][(k * M + state[i / 2]) * M + state[i]] += p;
            }
        }
    }
    for (auto& v : out.marginal) {
        for (double& x : v) {
            x /= evidence;
        }
    }
    for (auto& v : out.pairwise) {
        for (double& x : v) {
            x /= evidence;
        }
    }
    out.log_likelihood = std::log(evidence);
    return out;
}

/// Chain-rule form of the joint state entropy in bits:
///   H(p0) + sum_{j>=1} 2^j sum_m pbar_{j-1}(m) H(eps_j row m)
inline double chain_rule_entropy(const HmtParams& params) {
    const int M = params.num_states;
    auto h2 = [](const double* p, int n) {
        double h = 0.0;
        for (int i = 0; i < n; ++i) {
            if (p[i] > 0.0) {
                h -= p[i] * std::log2(p[i]);
            }
        }
        return h;
    };
    std::vector<double> pbar = params.root_pmf;
    double total = h2(pbar.data(), M);
    for (int j = 1; j < params.levels; ++j) {
        const auto& eps = params.trans[j - 1];
        double scale_term = 0.0;
        for (int m = 0; m < M; ++m) {
            scale_term += pbar[m] * h2(eps.data() + m * M, M);
        }
        total += std::ldexp(1.0, j) * scale_term;
        std::vector<double> next(M, 0.0);
        for (int m = 0; m < M; ++m) {
            for (int n = 0; n < M; ++n) {
                next[n] += pbar[m] * eps[m * M + n];
            }
        }
        pbar = std::move(next);
    }
    return total;
}

/// Random valid parameters (normalized positive pmf rows, spread emissions).
inline HmtParams random_params(int levels, int num_states, Rng& rng) {
    HmtParams p;
    p.levels = levels;
    p.num_states = num_states;
    auto random_pmf = [&](int n) {
        std::vector<double> v(n);
        double sum = 0.0;
        for (double& x : v) {
            x = 0.05 + rng.uniform();
            sum += x;
        }
        for (double& x : v) {
            x /= sum;
        }
        return v;
    };
    p.root_pmf = random_pmf(num_states);
    p.trans.resize(levels - 1);
    for (int j = 1; j < levels; ++j) {
        for (int m = 0; m < num_states; ++m) {
            const auto row = random_pmf(num_states);
            p.trans[j - 1].insert(p.trans[j - 1].end(), row.begin(), row.end());
        }
    }
    p.means.assign(levels, std::vector<double>(num_states, 0.0));
    p.variances.assign(levels, std::vector<double>(num_states, 0.0));
    for (int j = 0; j < levels; ++j) {
        for (int m = 0; m < num_states; ++m) {
            p.means[j][m] = rng.uniform(-2.0, 2.0);
            p.variances[j][m] = rng.uniform(0.25, 4.0);
        }
    }
    return p;
}

/// Random tree with standard normal details.
inline WaveletTree random_tree(int levels, Rng& rng) {
    WaveletTree t;
    t.levels = levels;
    t.u0 = rng.gaussian();
    t.details.resize(levels);
    for (int j = 0; j < levels; ++j) {
        t.details[j].resize(std::size_t{1} << j);
        for (double& d : t.details[j]) {
            d = rng.gaussian();
        }
    }
    return t;
}

/// Sample a tree from the generative model (states root-down, then
/// Gaussian emissions).
inline WaveletTree simulate_tree(const HmtParams& params, Rng& rng) {
    WaveletTree t;
    t.levels = params.levels;
    t.u0 = 0.0;
    t.details.resize(params.levels);
    const int M = params.num_states;
    std::vector<std::vector<int>> states(params.levels);
    auto draw = [&](const double* pmf) {
        double u = rng.uniform();
        for (int m = 0; m < M; ++m) {
            if (u < pmf[m] || m == M - 1) {
                return m;
            }
            u -= pmf[m];
        }
        return M - 1;
    };
    for (int j = 0; j < params.levels; ++j) {
        const std::size_t width = std::size_t{1} << j;
        states[j].resize(width);
        t.details[j].resize(width);
        for (std::size_t k = 0; k < width; ++k) {
            const int s = (j == 0) ? draw(params.root_pmf.data())
                                   : draw(params.trans[j - 1].data() +
                                          states[j - 1][k / 2] * M);
            states[j][k] = s;
            t.details[j][k] = params.means[j][s] +
                              std::sqrt(params.variances[j][s]) * rng.gaussian();
        }
    }
    return t;
}

}  // namespace wavecomplex::testing
