#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bbi/blackbox.hpp"
#include "bbi/targets/simple.hpp"

namespace bbi::testing {

inline BlackBoxMap random_permutation(std::size_t width, std::mt19937_64& rng) {
    std::vector<std::uint32_t> t(std::size_t{1} << width);
    std::iota(t.begin(), t.end(), 0U);
    std::shuffle(t.begin(), t.end(), rng);
    return targets::table_map(width, width, std::move(t), "perm");
}

inline BlackBoxMap random_function(std::size_t width, std::mt19937_64& rng) {
    std::vector<std::uint32_t> t(std::size_t{1} << width);
    for (auto& v : t) v = static_cast<std::uint32_t>(rng() % t.size());
    return targets::table_map(width, width, std::move(t), "func");
}

/// Companion-matrix step of the LFSR with feedback polynomial `mask`
/// (bit i = coefficient of X^i, degree = width). A nonzero state sequence
/// has that polynomial as its minimal polynomial when it is irreducible.
inline BlackBoxMap lfsr_step(std::size_t width, std::uint64_t mask) {
    std::vector<std::uint32_t> t(std::size_t{1} << width);
    for (std::uint32_t s = 0; s < t.size(); ++s) {
        std::uint32_t fb = 0;
        for (std::size_t i = 0; i < width; ++i) fb ^= ((s >> i) & 1U) & ((mask >> i) & 1U);
        t[s] = (s >> 1) | (fb << (width - 1));
    }
    return targets::table_map(width, width, std::move(t), "lfsr");
}

inline BitVec random_point(std::size_t width, std::mt19937_64& rng) {
    return BitVec::from_uint(rng() % (std::uint64_t{1} << width), width);
}

}  // namespace bbi::testing
