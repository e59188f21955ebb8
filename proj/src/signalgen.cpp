// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/signalgen.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "wavecomplex/rng.hpp"

namespace wavecomplex {

Signal logistic_series(double r, double x0, std::size_t n, std::size_t burn_in) {
    if (!(r >= 0.0 && r <= 4.0)) {
        throw std::domain_error("logistic_series: r must lie in [0, 4]");
    }
    if (!(x0 > 0.0 && x0 < 1.0)) {
        throw std::domain_error("logistic_series: x0 must lie in (0, 1)");
    }
    double x = x0;
    for (std::size_t i = 0; i < burn_in; ++i) {
        x = r * x * (1.0 - x);
    }
    Signal out;
    out.samples.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        out.samples.push_back(x);
        x = r * x * (1.0 - x);
    }
    return out;
}

namespace {

using State = std::array<double, 3>;

State lorenz_deriv(const State& s, const LorenzConfig& c) {
    return {c.sigma * (s[1] - s[0]),
            s[0] * (c.rho - s[2]) - s[1],
            s[0] * s[1] - c.beta * s[2]};
}

State rk4_step(const State& s, const LorenzConfig& c) {
    const double dt = c.dt;
    const State k1 = lorenz_deriv(s, c);
    const State s2 = {s[0] + 0.5 * dt * k1[0], s[1] + 0.5 * dt * k1[1], s[2] + 0.5 * dt * k1[2]};
    const State k2 = lorenz_deriv(s2, c);
    const State s3 = {s[0] + 0.5 * dt * k2[0], s[1] + 0.5 * dt * k2[1], s[2] + 0.5 * dt * k2[2]};
    const State k3 = lorenz_deriv(s3, c);
    const State s4 = {s[0] + dt * k3[0], s[1] + dt * k3[1], s[2] + dt * k3[2]};
    const State k4 = lorenz_deriv(s4, c);
    return {s[0] + dt / 6.0 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
            s[1] + dt / 6.0 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]),
            s[2] + dt / 6.0 * (k1[2] + 2 * k2[2] + 2 * k3[2] + k4[2])};
}

}  // namespace

Signal lorenz_series(const LorenzConfig& cfg, LorenzComponent component) {
    if (!(cfg.dt > 0.0)) {
        throw std::domain_error("lorenz_series: dt must be positive");
    }
    State s = {cfg.x0, cfg.y0, cfg.z0};
    const std::size_t comp = static_cast<std::size_t>(component);
    Signal out;
    out.samples.reserve(cfg.n);
    const std::size_t total = cfg.burn_in + cfg.n;
    for (std::size_t i = 0; i < total; ++i) {
        s = rk4_step(s, cfg);
        // negated comparison also catches NaN states
        if (!(std::fabs(s[0]) < 1e6 && std::fabs(s[1]) < 1e6 && std::fabs(s[2]) < 1e6)) {
            throw std::runtime_error("lorenz_series: trajectory diverged (|state| >= 1e6)");
        }
        if (i >= cfg.burn_in) {
            out.samples.push_back(s[comp]);
        }
    }
    return out;
}

Signal add_wgn(const Signal& s, double variance, std::uint64_t seed) {
    if (!(variance >= 0.0)) {
        throw std::domain_error("add_wgn: variance must be >= 0");
    }
    Signal out = s;
    if (variance == 0.0) {
        return out;
    }
    Rng rng(seed);
    const double sigma = std::sqrt(variance);
    for (double& v : out.samples) {
        v += sigma * rng.gaussian();
    }
    return out;
}

}  // namespace wavecomplex
