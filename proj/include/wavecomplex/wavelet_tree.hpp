// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <cstddef>
#include <vector>

namespace wavecomplex {

/// Full dyadic decomposition of a length-2^J signal: one scaling coefficient
/// u0 plus detail vectors d_{j,k} for scales j = 0..J-1 (2^j coefficients at
/// scale j), 2^J - 1 details in total. Scale 0 is the coarsest.
///
/// Nodes form a binary tree: (j,k) has children (j+1,2k) and (j+1,2k+1).
/// The flat heap index is i = 2^j + k with the root at i = 1.
struct WaveletTree {
    int levels = 0;  ///< J
    double u0 = 0.0;
    std::vector<std::vector<double>> details;  ///< details[j].size() == 2^j

    std::size_t node_count() const { return (std::size_t{1} << levels) - 1; }

    /// Structural validity: details has `levels` scales of sizes 2^j.
    bool well_formed() const;
};

/// Flat index i = 2^j + k. Throws std::out_of_range unless 0 <= k < 2^j.
std::size_t node_index(int scale, std::size_t pos);

/// Parent of flat index i is floor(i/2). Throws std::domain_error for the
/// root (i = 1) and std::out_of_range for i = 0.
std::size_t parent_index(std::size_t i);

/// Scale j of flat index i (position of the highest set bit).
int scale_of_index(std::size_t i);

/// Position k = i - 2^j of flat index i within its scale.
std::size_t pos_of_index(std::size_t i);

}  // namespace wavecomplex
