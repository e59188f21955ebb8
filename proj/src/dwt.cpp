// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/dwt.hpp"

#include <stdexcept>

namespace wavecomplex {

namespace {

// Periodized single-level analysis/synthesis. Filter taps live at frame
// positions p = offset + m within the bank's aligned frame of length F.
// Analysis convolves at odd phase:  c[k] = sum_p f[p] x[(2k + 1 - p) mod N]
// Synthesis scatters with the complementary phase t = F - 2:
//   x[(2k + p - (F-2)) mod N] += c[k] f[p]
// This pairing reconstructs exactly for every supported bank.

std::size_t wrap(long long idx, long long n) {
    idx %= n;
    return static_cast<std::size_t>(idx < 0 ? idx + n : idx);
}

void analyze(const std::vector<double>& x, const FirFilter& f,
             std::vector<double>& out) {
    const long long n = static_cast<long long>(x.size());
    const std::size_t half = x.size() / 2;
    out.assign(half, 0.0);
    for (std::size_t k = 0; k < half; ++k) {
        const long long anchor = 2 * static_cast<long long>(k) + 1 - f.offset;
        double acc = 0.0;
        for (std::size_t m = 0; m < f.taps.size(); ++m) {
            acc += f.taps[m] * x[wrap(anchor - static_cast<long long>(m), n)];
        }
        out[k] = acc;
    }
}

void synthesize(const std::vector<double>& coeffs, const FirFilter& f,
                int aligned_len, std::vector<double>& x) {
    const long long n = static_cast<long long>(x.size());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        const double c = coeffs[k];
        if (c == 0.0) {
            continue;
        }
        const long long anchor =
            2 * static_cast<long long>(k) + f.offset - (aligned_len - 2);
        for (std::size_t m = 0; m < f.taps.size(); ++m) {
            x[wrap(anchor + static_cast<long long>(m), n)] += c * f.taps[m];
        }
    }
}

}  // namespace

WaveletTree forward(const Signal& s, const WaveletFilterBank& bank) {
    const int levels = dyadic_levels(s.size());
    if (levels < 2) {
        throw std::invalid_argument(
            "forward: signal length must be 2^J with J >= 2");
    }
    WaveletTree tree;
    tree.levels = levels;
    tree.details.resize(levels);
    std::vector<double> approx = s.samples;
    std::vector<double> next;
    for (int lev = 1; lev <= levels; ++lev) {
        analyze(approx, bank.dec_hi, tree.details[levels - lev]);
        analyze(approx, bank.dec_lo, next);
        approx.swap(next);
    }
    tree.u0 = approx[0];
    return tree;
}

Signal inverse(const WaveletTree& t, const WaveletFilterBank& bank) {
    if (!t.well_formed()) {
        throw std::invalid_argument("inverse: malformed wavelet tree");
    }
    std::vector<double> approx = {t.u0};
    for (int j = 0; j < t.levels; ++j) {
        std::vector<double> up(approx.size() * 2, 0.0);
        synthesize(approx, bank.rec_lo, bank.aligned_len, up);
        synthesize(t.details[j], bank.rec_hi, bank.aligned_len, up);
        approx.swap(up);
    }
    return Signal(std::move(approx));
}

}  // namespace wavecomplex
