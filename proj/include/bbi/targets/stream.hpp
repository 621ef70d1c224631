#pragma once

#include <cstdint>
#include <vector>

#include "bbi/blackbox.hpp"
#include "bbi/gf2poly.hpp"

namespace bbi::targets {

/// Filter generator: a Fibonacci LFSR over state (K, IV) with a nonlinear
/// output function.
///
/// State bit i holds s_{t+i}; one clock computes s_{t+L} = sum_{i<L} c_i s_{t+i}
/// from the feedback polynomial X^L + sum c_i X^i and shifts it in at the top.
/// The key occupies state bits 0..key_width-1 and the IV the bits above.
/// The filter is an algebraic normal form: the XOR over `filter` of the AND
/// of the state bits selected by each mask.
struct ToyStreamSpec {
    unsigned key_width = 16;
    unsigned iv_width = 8;
    std::uint64_t iv = 0xA5;
    Gf2Poly feedback = Gf2Poly::from_exponents({24, 23, 22, 17, 0});
    std::vector<std::uint64_t> filter{(1ULL << 1) | (1ULL << 6), (1ULL << 3) | (1ULL << 11) | (1ULL << 19), 1ULL << 8,
                                      (1ULL << 13) | (1ULL << 22), 1ULL << 17};
    unsigned warmup = 32;

    unsigned state_width() const noexcept { return key_width + iv_width; }
    void validate() const;
};

/// `count` filter outputs after `warmup` clocks, output t in bit t.
BitVec stream_keystream(const ToyStreamSpec& spec, const BitVec& key, std::size_t count);

/// Key -> keystream window map, key_width -> count; an embedding once
/// count > key_width.
BlackBoxMap stream_kpa_map(const ToyStreamSpec& spec, std::size_t count);

}  // namespace bbi::targets
