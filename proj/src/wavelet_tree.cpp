// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 Wavecomplex Contributors

#include "wavecomplex/wavelet_tree.hpp"

#include <stdexcept>

namespace wavecomplex {

bool WaveletTree::well_formed() const {
    if (levels < 1 || details.size() != static_cast<std::size_t>(levels)) {
        return false;
    }
    for (int j = 0; j < levels; ++j) {
        if (details[j].size() != (std::size_t{1} << j)) {
            return false;
        }
    }
    return true;
}

std::size_t node_index(int scale, std::size_t pos) {
    if (scale < 0 || pos >= (std::size_t{1} << scale)) {
        throw std::out_of_range("node_index: position outside scale");
    }
    return (std::size_t{1} << scale) + pos;
}

std::size_t parent_index(std::size_t i) {
    if (i == 0) {
        throw std::out_of_range("parent_index: 0 is not a node");
    }
    if (i == 1) {
        throw std::domain_error("parent_index: the root has no parent");
    }
    return i / 2;
}

int scale_of_index(std::size_t i) {
    if (i == 0) {
        throw std::out_of_range("scale_of_index: 0 is not a node");
    }
    int j = -1;
    while (i > 0) {
        i >>= 1;
        ++j;
    }
    return j;
}

std::size_t pos_of_index(std::size_t i) {
    return i - (std::size_t{1} << scale_of_index(i));
}

}  // namespace wavecomplex
