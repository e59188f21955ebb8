// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <span>
#include <vector>

#include "wavecomplex/hmt.hpp"

namespace wavecomplex {

/// Statistical-complexity summary of a fitted hidden Markov tree. All
/// entropies are reported in bits; nats never leave the hmt module.
struct ComplexityReport {
    double global_C = 0.0;        ///< H(S) in bits
    double global_C_norm = 0.0;   ///< H(S) / ((2^J - 1) log2 M), in [0,1]
    std::vector<double> local_C;  ///< H(S_j) per scale, bits
    double entropy_rate = 0.0;    ///< H(D|S) in bits; may be negative
    double entropy_rate_norm = 0.0;  ///< H(D|S) / (2^J - 1)
    int monotone_run = 0;  ///< longest strictly increasing run of local_C
};

/// Per-scale hidden-state marginals: p0 = root pmf, p_j = p_{j-1} eps_j.
std::vector<std::vector<double>> scale_marginals(const HmtParams& params);

/// Joint entropy H(S) of all hidden states in bits, evaluated through the
/// nested closed form over root pmf and transition rows (0 log 0 := 0).
/// Reads no means or variances.
double global_complexity(const HmtParams& params);

/// Local complexity C_j = H(S at scale j) in bits.
std::vector<double> local_complexity(const HmtParams& params);

/// Conditional differential entropy H(D|S) in bits:
/// sum_j 2^j sum_m pbar_j^m (1/2) log2(2 pi e sigma_jm^2). Negative values
/// are expected for small variances.
double entropy_rate(const HmtParams& params);

/// Length of the longest contiguous strictly-increasing run (>= 1 for a
/// non-empty input).
int monotone_run(std::span<const double> local_C);

/// Enumeration oracle: exact joint state entropy in bits by summing
/// -P log2 P over every configuration. Requires M^(2^J - 1) <= 2^20;
/// throws std::length_error above that.
double brute_force_tree_entropy(const HmtParams& params);

ComplexityReport complexity_report(const HmtParams& params);

}  // namespace wavecomplex
