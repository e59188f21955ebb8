// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#pragma once

#include <cstddef>
#include <cstdint>

#include "wavecomplex/signal.hpp"

namespace wavecomplex {

/// Lorenz system parameters and sampling setup. Defaults put the system in
/// the canonical chaotic regime sampled at dt = 0.01 after a 5000-step
/// transient.
struct LorenzConfig {
    double sigma = 10.0;
    double rho = 28.0;
    double beta = 8.0 / 3.0;
    double dt = 0.01;
    double x0 = 1.0;
    double y0 = 1.0;
    double z0 = 1.0;
    std::size_t burn_in = 5000;
    std::size_t n = 4096;
};

enum class LorenzComponent { x, y, z };

/// Iterates x_{k+1} = r x_k (1 - x_k), discards burn_in iterates (the
/// returned series starts at the current state after burn-in), returns n
/// samples. Throws std::domain_error for r outside [0,4] or x0 outside (0,1).
Signal logistic_series(double r, double x0, std::size_t n, std::size_t burn_in);

/// Classical fixed-step RK4 integration of the Lorenz system; samples the
/// chosen component once per step after burn_in. Throws std::runtime_error
/// if any state magnitude exceeds 1e6 (divergence).
Signal lorenz_series(const LorenzConfig& cfg, LorenzComponent component);

/// Returns s + e with e i.i.d. Gaussian(0, variance) from a seeded
/// deterministic generator. Same (seed, variance, length) gives bitwise
/// identical output.
Signal add_wgn(const Signal& s, double variance, std::uint64_t seed);

}  // namespace wavecomplex
