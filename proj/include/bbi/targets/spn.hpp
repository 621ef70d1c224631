#pragma once

#include <array>
#include <cstdint>

#include "bbi/blackbox.hpp"

namespace bbi::targets {

/// 16-bit toy substitution-permutation network with a 16-bit key.
///
/// Round r (0-based) XORs the key rotated left by r, applies the S-box to
/// each nibble, then the bit permutation (skipped in the last round). A final
/// whitening key (rotated by `rounds`) closes the cipher, so rounds = 0 is
/// plain P ^ K.
struct ToySpnSpec {
    unsigned rounds = 4;
    std::array<std::uint8_t, 16> sbox{0xE, 0x4, 0xD, 0x1, 0x2, 0xF, 0xB, 0x8, 0x3, 0xA, 0x6, 0xC, 0x5, 0x9, 0x0, 0x7};
    /// Output bit pbox[i] takes input bit i.
    std::array<std::uint8_t, 16> pbox{0, 4, 8, 12, 1, 5, 9, 13, 2, 6, 10, 14, 3, 7, 11, 15};

    /// Throws unless sbox and pbox are permutations of 0..15.
    void validate() const;
};

std::uint16_t spn_round_key(std::uint16_t key, unsigned round);
std::uint16_t spn_encrypt(const ToySpnSpec& spec, std::uint16_t key, std::uint16_t plaintext);
BitVec spn_encrypt(const ToySpnSpec& spec, const BitVec& key, const BitVec& plaintext);

/// Known-plaintext key map F(x) = E(x, P0), 16 -> 16.
BlackBoxMap kpa_map(const ToySpnSpec& spec, std::uint16_t plaintext);

}  // namespace bbi::targets
