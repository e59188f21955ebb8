// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/complexity.hpp"

#include <cmath>
#include <stdexcept>

namespace wavecomplex {

namespace {

constexpr double k_log2e = 1.4426950408889634074;  // 1/ln(2)

double log2_safe(double p) { return std::log(p) * k_log2e; }

}  // namespace

std::vector<std::vector<double>> scale_marginals(const HmtParams& params) {
    params.validate();
    const int M = params.num_states;
    std::vector<std::vector<double>> pbar(params.levels);
    pbar[0] = params.root_pmf;
    for (int j = 1; j < params.levels; ++j) {
        pbar[j].assign(M, 0.0);
        const auto& eps = params.trans[j - 1];
        for (int m = 0; m < M; ++m) {
            for (int n = 0; n < M; ++n) {
                pbar[j][n] += pbar[j - 1][m] * eps[m * M + n];
            }
        }
    }
    return pbar;
}

double global_complexity(const HmtParams& params) {
    params.validate();
    const int M = params.num_states;
    const int J = params.levels;

    // Nested evaluation from the deepest transitions outward:
    //   T_j(m) = sum_n 2 eps_j(m,n) (log2 eps_j(m,n) + T_{j+1}(n)),  T_J = 0
    //   C = sum_m -p0(m) (log2 p0(m) + T_1(m))
    // with the 0 log 0 := 0 convention (a zero-probability branch
    // contributes nothing, including its entire subtree term).
    std::vector<double> inner(M, 0.0);
    for (int j = J - 1; j >= 1; --j) {
        const auto& eps = params.trans[j - 1];
        std::vector<double> outer(M, 0.0);
        for (int m = 0; m < M; ++m) {
            double acc = 0.0;
            for (int n = 0; n < M; ++n) {
                const double e = eps[m * M + n];
                if (e > 0.0) {
                    acc += 2.0 * e * (log2_safe(e) + inner[n]);
                }
            }
            outer[m] = acc;
        }
        inner = std::move(outer);
    }
    double c = 0.0;
    for (int m = 0; m < M; ++m) {
        const double p = params.root_pmf[m];
        if (p > 0.0) {
            c -= p * (log2_safe(p) + inner[m]);
        }
    }
    return c;
}

std::vector<double> local_complexity(const HmtParams& params) {
    const auto pbar = scale_marginals(params);
    std::vector<double> out(pbar.size(), 0.0);
    for (std::size_t j = 0; j < pbar.size(); ++j) {
        double h = 0.0;
        for (double p : pbar[j]) {
            if (p > 0.0) {
                h -= p * log2_safe(p);
            }
        }
        out[j] = h;
    }
    return out;
}

double entropy_rate(const HmtParams& params) {
    const auto pbar = scale_marginals(params);
    constexpr double k_log2_2pie = 4.0941911703612822054;  // log2(2 pi e)
    double h = 0.0;
    for (int j = 0; j < params.levels; ++j) {
        const double nodes = std::ldexp(1.0, j);  // 2^j
        double scale_term = 0.0;
        for (int m = 0; m < params.num_states; ++m) {
            scale_term += pbar[j][m] * 0.5 *
                          (k_log2_2pie + log2_safe(params.variances[j][m]));
        }
        h += nodes * scale_term;
    }
    return h;
}

int monotone_run(std::span<const double> local_C) {
    if (local_C.empty()) {
        throw std::invalid_argument("monotone_run: need at least one scale");
    }
    int best = 1;
    int run = 1;
    for (std::size_t j = 1; j < local_C.size(); ++j) {
        run = (local_C[j] > local_C[j - 1]) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

double brute_force_tree_entropy(const HmtParams& params) {
    params.validate();
    const int M = params.num_states;
    const int J = params.levels;
    const std::size_t node_count = (std::size_t{1} << J) - 1;
    double config_count = std::pow(static_cast<double>(M), static_cast<double>(node_count));
    if (config_count > static_cast<double>(1 << 20)) {
        throw std::length_error(
            "brute_force_tree_entropy: M^(2^J - 1) exceeds the 2^20 enumeration bound");
    }
    const auto total = static_cast<std::size_t>(config_count);

    // state of node i (heap index, root = 1) for configuration c
    std::vector<int> state(node_count + 1, 0);
    double entropy = 0.0;
    for (std::size_t c = 0; c < total; ++c) {
        std::size_t rest = c;
        for (std::size_t i = 1; i <= node_count; ++i) {
            state[i] = static_cast<int>(rest % M);
            rest /= M;
        }
        double p = params.root_pmf[state[1]];
        for (std::size_t i = 2; i <= node_count && p > 0.0; ++i) {
            p *= params.trans[scale_of_index(i) - 1][state[i / 2] * M + state[i]];
        }
        if (p > 0.0) {
            entropy -= p * log2_safe(p);
        }
    }
    return entropy;
}

ComplexityReport complexity_report(const HmtParams& params) {
    ComplexityReport report;
    report.global_C = global_complexity(params);
    const double nodes = std::ldexp(1.0, params.levels) - 1.0;
    const double per_node = (params.num_states > 1)
                                ? log2_safe(static_cast<double>(params.num_states))
                                : 1.0;
    report.global_C_norm = report.global_C / (nodes * per_node);
    report.local_C = local_complexity(params);
    report.entropy_rate = entropy_rate(params);
    report.entropy_rate_norm = report.entropy_rate / nodes;
    report.monotone_run = monotone_run(report.local_C);
    return report;
}

}  // namespace wavecomplex
