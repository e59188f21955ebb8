// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/signal.hpp"

namespace wavecomplex {

int dyadic_levels(std::size_t n) {
    if (n < 2 || (n & (n - 1)) != 0) {
        return -1;
    }
    int j = 0;
    while (n > 1) {
        n >>= 1;
        ++j;
    }
    return j;
}

}  // namespace wavecomplex
