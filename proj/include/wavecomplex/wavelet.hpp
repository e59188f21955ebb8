// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wavecomplex {

/// FIR filter as trimmed taps plus the position of taps[0] inside the
/// bank's common aligned frame (used by the transform engine; zero for
/// full-length filters).
struct FirFilter {
    std::vector<double> taps;
    int offset = 0;
};

/// Named analysis/synthesis filter quadruple. Orthogonal banks (haar, db2,
/// sym3, coif1, dmey) store reconstruction filters that are time-reverses of
/// the decomposition filters. Biorthogonal banks (bior1.3, rbio1.3) carry
/// distinct primal/dual pairs of different lengths.
struct WaveletFilterBank {
    std::string name;
    FirFilter dec_lo;
    FirFilter dec_hi;
    FirFilter rec_lo;
    FirFilter rec_hi;
    int aligned_len = 0;  ///< common frame length F
    bool orthogonal = false;
};

/// The seven supported bank names.
std::span<const std::string_view> wavelet_names();

/// Look up a bank by name ("haar", "db2", "sym3", "coif1", "bior1.3",
/// "rbio1.3", "dmey"). Throws std::invalid_argument for unknown names.
const WaveletFilterBank& filter_bank(std::string_view name);

}  // namespace wavecomplex
