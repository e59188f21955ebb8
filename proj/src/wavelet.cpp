// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/wavelet.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace wavecomplex {

namespace {

// Mother (synthesis lowpass) filters in standard order, correctly rounded
// doubles of the exact closed forms. db2: (1+-sqrt3)-family over 4*sqrt2;
// sym3 equals db3 (the least-asymmetric choice coincides with extremal phase
// at this order); coif1 from the sqrt7 closed form.
constexpr double k_haar_h[] = {0.70710678118654752, 0.70710678118654752};

constexpr double k_db2_h[] = {
    0.48296291314453414, 0.83651630373780791,
    0.22414386804201338, -0.12940952255126038};

constexpr double k_sym3_h[] = {
    0.33267055295008262, 0.80689150931109258, 0.45987750211849157,
    -0.13501102001025459, -0.085441273882026662, 0.035226291885709537};

constexpr double k_coif1_h[] = {
    -0.072732619512526448, 0.33789766245748177, 0.85257202021160042,
    0.38486484686485775, -0.072732619512526448, -0.015655728135791993};

// 62-tap discrete Meyer lowpass: inverse Fourier transform of the Meyer
// conjugate mirror filter (degree-7 auxiliary polynomial), truncated to 62
// taps and projected onto the exact orthonormality + admissibility
// constraints, so perfect reconstruction holds to machine precision.
constexpr double k_dmey_h[] = {
    -1.278174714122809e-06,   -1.006379879456775e-06,
    -1.7566759055144859e-06,  1.5085838924064681e-06,
    7.4571163409797136e-06,   1.3971465691577981e-05,
    -1.9200699630114157e-05,  -2.5536737506331119e-05,
    3.1615079784190778e-05,   7.1090648399934004e-05,
    -4.0203417988684007e-06,  -9.676719983753979e-06,
    -9.2883076331885702e-05,  -0.00025041620153953403,
    0.00031682071734812051,   0.00098913856954288039,
    -0.00099585571986414781,  -0.002695193045534595,
    0.0025796719277501566,    0.0058617008001467579,
    -0.0064125671704422672,   -0.010916657044896211,
    0.014874531304189453,     0.017496378518042078,
    -0.032260546728282151,    -0.024317252311407554,
    0.063720598280655794,     0.030594618502263953,
    -0.13266234353356882,     -0.035066758755539877,
    0.44411012840076275,      0.7437337291915409,
    0.44411446187100501,      -0.035067180772904813,
    -0.13268927950708354,     0.030590861763336537,
    0.063671754167314978,     -0.024326011086539305,
    -0.032022640678384812,    0.017490123655527129,
    0.015370999830190871,     -0.010915529903514392,
    -0.0063710428045203812,   0.0058518052352667885,
    0.0022440094020637603,    -0.0027149652969033875,
    -0.00053162580199064152,  0.00094999545175354226,
    0.00019640606477316555,   -0.00026595194575028804,
    -5.6320287039236926e-05,  -4.1891828494105815e-05,
    0.00014717318666964443,   4.5046064533840798e-05,
    -0.00021128219359610901,  8.3830678598002974e-05,
    3.2103875937652795e-05,   -4.7414783192179469e-05,
    2.7715433032682616e-05,   -1.3223600053266251e-05,
    -6.0220781186605281e-06,  7.6484716506874612e-06};

// CDF spline 1,3 pair: primal lowpass is the Haar pair, dual lowpass the
// 6-tap spline filter.
constexpr double k_b = 0.70710678118654752;   // 1/sqrt(2)
constexpr double k_a = 0.088388347648318441;  // sqrt(2)/16

template <std::size_t N>
std::vector<double> vec(const double (&arr)[N]) {
    return std::vector<double>(arr, arr + N);
}

std::vector<double> reversed(std::vector<double> v) {
    return {v.rbegin(), v.rend()};
}

WaveletFilterBank make_orthogonal(std::string name, std::vector<double> h) {
    const int len = static_cast<int>(h.size());
    WaveletFilterBank bank;
    bank.name = std::move(name);
    bank.aligned_len = len;
    bank.orthogonal = true;
    bank.rec_lo.taps = h;
    bank.rec_hi.taps.resize(len);
    for (int k = 0; k < len; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        bank.rec_hi.taps[k] = sign * h[len - 1 - k];
    }
    bank.dec_lo.taps = reversed(bank.rec_lo.taps);
    bank.dec_hi.taps = reversed(bank.rec_hi.taps);
    return bank;
}

WaveletFilterBank make_bior13() {
    WaveletFilterBank bank;
    bank.name = "bior1.3";
    bank.aligned_len = 6;
    bank.dec_lo.taps = {-k_a, k_a, k_b, k_b, k_a, -k_a};
    bank.dec_hi = {{-k_b, k_b}, 2};
    bank.rec_lo = {{k_b, k_b}, 2};
    bank.rec_hi.taps = {-k_a, -k_a, k_b, -k_b, k_a, k_a};
    return bank;
}

WaveletFilterBank make_rbio13() {
    WaveletFilterBank bank;
    bank.name = "rbio1.3";
    bank.aligned_len = 6;
    bank.dec_lo = {{k_b, k_b}, 2};
    bank.dec_hi.taps = {k_a, k_a, -k_b, k_b, -k_a, -k_a};
    bank.rec_lo.taps = {-k_a, k_a, k_b, k_b, k_a, -k_a};
    bank.rec_hi = {{k_b, -k_b}, 2};
    return bank;
}

const std::map<std::string, WaveletFilterBank, std::less<>>& registry() {
    static const std::map<std::string, WaveletFilterBank, std::less<>> banks = [] {
        std::map<std::string, WaveletFilterBank, std::less<>> m;
        m.emplace("haar", make_orthogonal("haar", vec(k_haar_h)));
        m.emplace("db2", make_orthogonal("db2", vec(k_db2_h)));
        m.emplace("sym3", make_orthogonal("sym3", vec(k_sym3_h)));
        m.emplace("coif1", make_orthogonal("coif1", vec(k_coif1_h)));
        m.emplace("bior1.3", make_bior13());
        m.emplace("rbio1.3", make_rbio13());
        m.emplace("dmey", make_orthogonal("dmey", vec(k_dmey_h)));
        return m;
    }();
    return banks;
}

constexpr std::array<std::string_view, 7> k_names = {
    "haar", "db2", "sym3", "coif1", "bior1.3", "rbio1.3", "dmey"};

}  // namespace

std::span<const std::string_view> wavelet_names() { return k_names; }

const WaveletFilterBank& filter_bank(std::string_view name) {
    const auto& banks = registry();
    const auto it = banks.find(name);
    if (it == banks.end()) {
        std::string msg = "unknown wavelet '";
        msg += name;
        msg += "'; valid names: haar, db2, sym3, coif1, bior1.3, rbio1.3, dmey";
        throw std::invalid_argument(msg);
    }
    return it->second;
}

}  // namespace wavecomplex
