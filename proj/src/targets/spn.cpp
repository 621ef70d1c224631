#include "bbi/targets/spn.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bbi::targets {

namespace {

void check_permutation(const std::array<std::uint8_t, 16>& table, const char* what) {
    std::uint32_t seen = 0;
    for (auto v : table) {
        if (v > 15) throw std::invalid_argument(std::string(what) + ": entry out of range");
        seen |= 1U << v;
    }
    if (seen != 0xFFFFU) throw std::invalid_argument(std::string(what) + " is not a permutation");
}

}  // namespace

void ToySpnSpec::validate() const {
    check_permutation(sbox, "spn sbox");
    check_permutation(pbox, "spn pbox");
}

std::uint16_t spn_round_key(std::uint16_t key, unsigned round) {
    const unsigned r = round % 16;
    if (r == 0) return key;
    return static_cast<std::uint16_t>((key << r) | (key >> (16 - r)));
}

std::uint16_t spn_encrypt(const ToySpnSpec& spec, std::uint16_t key, std::uint16_t plaintext) {
    std::uint16_t s = plaintext;
    for (unsigned r = 0; r < spec.rounds; ++r) {
        s ^= spn_round_key(key, r);
        std::uint16_t sub = 0;
        for (unsigned nib = 0; nib < 4; ++nib) sub |= static_cast<std::uint16_t>(spec.sbox[(s >> (4 * nib)) & 0xF] << (4 * nib));
        s = sub;
        if (r + 1 < spec.rounds) {
            std::uint16_t perm = 0;
            for (unsigned i = 0; i < 16; ++i)
                if ((s >> i) & 1U) perm |= static_cast<std::uint16_t>(1U << spec.pbox[i]);
            s = perm;
        }
    }
    return s ^ spn_round_key(key, spec.rounds);
}

BitVec spn_encrypt(const ToySpnSpec& spec, const BitVec& key, const BitVec& plaintext) {
    if (key.width() != 16 || plaintext.width() != 16) throw std::invalid_argument("spn_encrypt: key and block are 16 bits");
    return BitVec::from_uint(spn_encrypt(spec, static_cast<std::uint16_t>(key.to_uint()),
                                         static_cast<std::uint16_t>(plaintext.to_uint())),
                             16);
}

BlackBoxMap kpa_map(const ToySpnSpec& spec, std::uint16_t plaintext) {
    spec.validate();
    char label[32];
    std::snprintf(label, sizeof label, "spn-kpa[P0=0x%04x]", plaintext);
    return BlackBoxMap(16, 16, label, [spec, plaintext](const BitVec& x) {
        return BitVec::from_uint(spn_encrypt(spec, static_cast<std::uint16_t>(x.to_uint()), plaintext), 16);
    });
}

}  // namespace bbi::targets
