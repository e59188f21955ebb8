// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wavecomplex/signalgen.hpp"

using namespace wavecomplex;

namespace {

double sample_mean(const Signal& s) {
    return std::accumulate(s.samples.begin(), s.samples.end(), 0.0) / s.size();
}

double sample_variance(const Signal& s) {
    const double mean = sample_mean(s);
    double acc = 0.0;
    for (double v : s.samples) {
        acc += (v - mean) * (v - mean);
    }
    return acc / s.size();
}

}  // namespace

TEST_CASE("logistic map: explicit first step at r=4") {
    const Signal s = logistic_series(4.0, 0.3, 2, 0);
    CHECK(s[0] == 0.3);
    CHECK(s[1] == doctest::Approx(4.0 * 0.3 * 0.7).epsilon(1e-15));
}

TEST_CASE("logistic map: fixed point at r=2, x0=0.5") {
    const Signal s = logistic_series(2.0, 0.5, 4, 0);
    for (double v : s.samples) {
        CHECK(v == doctest::Approx(0.5).epsilon(1e-15));
    }
}

TEST_CASE("logistic map: r=3.2 settles on the known period-2 orbit") {
    // fixed points of f(f(x)): ((r+1) +- sqrt((r+1)(r-3))) / (2r)
    const double lo = 0.51304450953262992;
    const double hi = 0.79945549046737008;
    const Signal s = logistic_series(3.2, 0.3, 64, 1000);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const double expect = (std::fabs(s[0] - lo) < std::fabs(s[0] - hi))
                                  ? (i % 2 == 0 ? lo : hi)
                                  : (i % 2 == 0 ? hi : lo);
        CHECK(s[i] == doctest::Approx(expect).epsilon(1e-9));
    }
}

TEST_CASE("logistic map: orbit stays in [0,1]") {
    for (double r : {0.5, 1.7, 3.2, 3.99, 4.0}) {
        const Signal s = logistic_series(r, 0.37, 512, 100);
        for (double v : s.samples) {
            CHECK(v >= 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("logistic map: domain errors") {
    CHECK_THROWS_AS(logistic_series(4.2, 0.3, 8, 0), std::domain_error);
    CHECK_THROWS_AS(logistic_series(-0.1, 0.3, 8, 0), std::domain_error);
    CHECK_THROWS_AS(logistic_series(3.0, 0.0, 8, 0), std::domain_error);
    CHECK_THROWS_AS(logistic_series(3.0, 1.0, 8, 0), std::domain_error);
}

TEST_CASE("lorenz: origin is an equilibrium") {
    LorenzConfig cfg;
    cfg.x0 = cfg.y0 = cfg.z0 = 0.0;
    cfg.burn_in = 0;
    cfg.n = 16;
    const Signal s = lorenz_series(cfg, LorenzComponent::y);
    for (double v : s.samples) {
        CHECK(v == 0.0);
    }
}

TEST_CASE("lorenz: rho < 1 decays toward the origin") {
    LorenzConfig cfg;
    cfg.rho = 0.5;
    cfg.x0 = 0.1;
    cfg.y0 = -0.2;
    cfg.z0 = 0.1;
    cfg.burn_in = 3000;
    cfg.n = 64;
    const Signal s = lorenz_series(cfg, LorenzComponent::y);
    for (double v : s.samples) {
        CHECK(std::fabs(v) < 1e-6);
    }
}

TEST_CASE("lorenz: chaotic defaults give a bounded series with large variance") {
    // thresholds frozen from an independent RK4 run: var ~ 76.8, max|y| ~ 24.9
    const Signal s = lorenz_series(LorenzConfig{}, LorenzComponent::y);
    CHECK(s.size() == 4096);
    CHECK(sample_variance(s) > 10.0);
    CHECK(sample_variance(s) < 200.0);
    const auto extreme = std::max_element(s.samples.begin(), s.samples.end(),
                                          [](double a, double b) {
                                              return std::fabs(a) < std::fabs(b);
                                          });
    CHECK(std::fabs(*extreme) < 60.0);
}

TEST_CASE("lorenz: RK4 halving dt shrinks the error about 16x") {
    auto run = [](double dt, std::size_t steps) {
        LorenzConfig cfg;
        cfg.dt = dt;
        cfg.burn_in = 0;
        cfg.n = steps;
        return lorenz_series(cfg, LorenzComponent::y);
    };
    // reference at dt/8, compared on the coarse grid
    const Signal ref = run(0.00125, 800);
    const Signal coarse = run(0.01, 100);
    const Signal fine = run(0.005, 200);
    double err_coarse = 0.0;
    double err_fine = 0.0;
    for (std::size_t i = 0; i < 100; ++i) {
        err_coarse = std::max(err_coarse, std::fabs(coarse[i] - ref[8 * i + 7]));
        err_fine = std::max(err_fine, std::fabs(fine[2 * i + 1] - ref[8 * i + 7]));
    }
    const double ratio = err_coarse / err_fine;
    CHECK(ratio > 12.0);
    CHECK(ratio < 20.0);
}

TEST_CASE("lorenz: divergence raises") {
    LorenzConfig cfg;
    cfg.dt = 1.0;  // wildly too coarse; RK4 blows up
    cfg.burn_in = 0;
    cfg.n = 1000;
    CHECK_THROWS_AS(lorenz_series(cfg, LorenzComponent::y), std::runtime_error);
}

TEST_CASE("add_wgn: zero variance is the identity") {
    const Signal s = logistic_series(3.7, 0.3, 64, 10);
    const Signal noisy = add_wgn(s, 0.0, 99);
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(noisy[i] == s[i]);
    }
}

TEST_CASE("add_wgn: determinism") {
    const Signal s(256, 1.0);
    const Signal a = add_wgn(s, 2.0, 1234);
    const Signal b = add_wgn(s, 2.0, 1234);
    const Signal c = add_wgn(s, 2.0, 1235);
    CHECK(a.samples == b.samples);
    CHECK(a.samples != c.samples);
}

TEST_CASE("add_wgn: moment sanity at n=2^16") {
    const Signal zero(std::size_t{1} << 16, 0.0);
    const Signal e = add_wgn(zero, 1.0, 7);
    CHECK(sample_variance(e) > 0.97);
    CHECK(sample_variance(e) < 1.03);
    CHECK(std::fabs(sample_mean(e)) < 0.02);
}

TEST_CASE("add_wgn: negative variance rejected") {
    CHECK_THROWS_AS(add_wgn(Signal(8, 0.0), -1.0, 0), std::domain_error);
}
