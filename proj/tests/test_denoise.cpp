// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "wavecomplex/denoise.hpp"
#include "wavecomplex/rng.hpp"
#include "wavecomplex/signalgen.hpp"

using namespace wavecomplex;
using wavecomplex::testing::random_params;
using wavecomplex::testing::random_tree;

namespace {

struct Fitted {
    WaveletTree tree;
    HmtParams params;
    Posteriors post;
};

Fitted fitted_random_tree(int levels, std::uint64_t seed) {
    Rng rng(seed);
    Fitted f;
    f.tree = random_tree(levels, rng);
    FitConfig cfg;
    cfg.max_iter = 15;
    cfg.seed = seed;
    FitResult result = fit(f.tree, cfg);
    f.params = std::move(result.params);
    f.post = std::move(result.posteriors);
    return f;
}

}  // namespace

TEST_CASE("shrink_tree: zero noise variance is the identity") {
    const Fitted f = fitted_random_tree(5, 11);
    const WaveletTree out = shrink_tree(f.tree, f.params, f.post, 0.0);
    CHECK(out.u0 == f.tree.u0);
    for (int j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < f.tree.details[j].size(); ++k) {
            CHECK(out.details[j][k] == doctest::Approx(f.tree.details[j][k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("shrink_tree: noise above all variances with zero means kills details") {
    Fitted f = fitted_random_tree(5, 12);
    for (auto& v : f.params.means) {
        v = {0.0, 0.0};
    }
    double max_var = 0.0;
    for (const auto& v : f.params.variances) {
        max_var = std::max({max_var, v[0], v[1]});
    }
    const WaveletTree out = shrink_tree(f.tree, f.params, f.post, max_var * 1.01);
    CHECK(out.u0 == f.tree.u0);  // u0 is never shrunk
    for (const auto& scale : out.details) {
        for (double d : scale) {
            CHECK(d == 0.0);
        }
    }
}

TEST_CASE("shrink_tree: hard posterior reduces to the Wiener gain") {
    Fitted f = fitted_random_tree(4, 13);
    for (auto& v : f.params.means) {
        v = {0.0, 0.0};
    }
    // force state 1 everywhere
    for (int j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < f.tree.details[j].size(); ++k) {
            f.post.marginal[j][k * 2] = 0.0;
            f.post.marginal[j][k * 2 + 1] = 1.0;
        }
    }
    const double nv = 0.5;
    const WaveletTree out = shrink_tree(f.tree, f.params, f.post, nv);
    for (int j = 0; j < 4; ++j) {
        const double var = f.params.variances[j][1];
        const double gain = std::max(var - nv, 0.0) / var;
        for (std::size_t k = 0; k < f.tree.details[j].size(); ++k) {
            CHECK(out.details[j][k] ==
                  doctest::Approx(gain * f.tree.details[j][k]).epsilon(1e-12));
        }
    }
}

TEST_CASE("shrink_tree: non-expansive around the mixed mean, monotone in noise") {
    // The contraction bound is a theorem only when each node's mixture
    // shares one mean (zero-mean fits); with distinct state means the
    // posterior-weighted estimate can leave the bracket.
    Rng rng(14);
    Fitted f;
    f.tree = random_tree(5, rng);
    FitConfig cfg;
    cfg.max_iter = 15;
    cfg.zero_mean = true;
    FitResult result = fit(f.tree, cfg);
    f.params = std::move(result.params);
    f.post = std::move(result.posteriors);

    const WaveletTree low = shrink_tree(f.tree, f.params, f.post, 0.2);
    const WaveletTree high = shrink_tree(f.tree, f.params, f.post, 0.8);
    for (int j = 0; j < 5; ++j) {
        for (std::size_t k = 0; k < f.tree.details[j].size(); ++k) {
            const double dev = std::fabs(f.tree.details[j][k]);
            const double dev_low = std::fabs(low.details[j][k]);
            const double dev_high = std::fabs(high.details[j][k]);
            CHECK(dev_low <= dev + 1e-12);
            CHECK(dev_high <= dev_low + 1e-12);
        }
    }
}

TEST_CASE("shrink_tree: shape mismatch raises") {
    const Fitted f = fitted_random_tree(4, 15);
    Rng rng(5);
    const HmtParams other = random_params(5, 2, rng);
    CHECK_THROWS_AS(shrink_tree(f.tree, other, f.post, 1.0), std::invalid_argument);
}

TEST_CASE("denoise_signal: clean constant signal with zero noise passes through") {
    const Signal s(64, 3.25);
    DenoiseConfig cfg;
    cfg.noise_variance = 0.0;
    cfg.fit.max_iter = 5;
    const Signal out = denoise_signal(s, filter_bank("db2"), cfg);
    for (double v : out.samples) {
        CHECK(v == doctest::Approx(3.25).epsilon(1e-10));
    }
}

TEST_CASE("denoise_signal: beats the do-nothing baseline on noisy Lorenz") {
    LorenzConfig lorenz;
    lorenz.n = 1024;
    const Signal clean = lorenz_series(lorenz, LorenzComponent::y);
    const Signal noisy = add_wgn(clean, 1.0, 31337);
    CHECK(residual_energy_density(noisy, clean) == doctest::Approx(1.0).epsilon(0.1));
    DenoiseConfig cfg;
    cfg.noise_variance = 1.0;
    cfg.fit.seed = 1;
    for (const auto name : {"haar", "dmey"}) {
        CAPTURE(name);
        const Signal out = denoise_signal(noisy, filter_bank(name), cfg);
        CHECK(residual_energy_density(out, clean) < 1.0);
    }
}

TEST_CASE("residual_energy_density: definition cases") {
    const Signal a({1.0, 2.0, 3.0, 4.0});
    CHECK(residual_energy_density(a, a) == 0.0);
    Signal b = a;
    for (double& v : b.samples) {
        v += 0.5;
    }
    CHECK(residual_energy_density(b, a) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(residual_energy_density(a, Signal(3, 0.0)), std::invalid_argument);
}
