// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <cstddef>
#include <vector>

namespace wavecomplex {

/// A real-valued sample vector. Wavelet analysis requires dyadic length 2^J.
struct Signal {
    std::vector<double> samples;

    Signal() = default;
    explicit Signal(std::vector<double> s) : samples(std::move(s)) {}
    explicit Signal(std::size_t n, double value = 0.0) : samples(n, value) {}

    std::size_t size() const { return samples.size(); }
    bool empty() const { return samples.empty(); }
    double& operator[](std::size_t i) { return samples[i]; }
    double operator[](std::size_t i) const { return samples[i]; }
};

/// Returns J if n == 2^J with J >= 1, otherwise -1.
int dyadic_levels(std::size_t n);

}  // namespace wavecomplex
