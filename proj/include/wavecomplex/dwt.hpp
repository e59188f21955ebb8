// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include "wavecomplex/signal.hpp"
#include "wavecomplex/wavelet.hpp"
#include "wavecomplex/wavelet_tree.hpp"

namespace wavecomplex {

/// Full J-level periodized decomposition of a length-2^J signal (J >= 2).
/// Boundary handling is circular convolution, so every scale keeps exactly
/// 2^j coefficients and reconstruction is exact for all seven banks.
/// Throws std::invalid_argument for non-dyadic input.
WaveletTree forward(const Signal& s, const WaveletFilterBank& bank);

/// Inverse transform; inverse(forward(s)) == s to below 1e-8 max abs error.
/// Throws std::invalid_argument for a malformed tree.
Signal inverse(const WaveletTree& t, const WaveletFilterBank& bank);

}  // namespace wavecomplex
