#pragma once

#include <cstdint>

#include "bbi/blackbox.hpp"
#include "bbi/intmod.hpp"

namespace bbi::targets {

/// Desk-scale RSA public key n = p q (distinct odd primes, n < 2^24).
///
/// Constructed from (n, e): the modulus is factored by trial division to
/// check gcd(e, phi(n)) = 1. The factors are kept for test oracles only; the
/// maps below never touch them.
class RsaParams {
public:
    RsaParams(std::uint64_t n, std::uint64_t e);
    static RsaParams from_primes(std::uint64_t p, std::uint64_t q, std::uint64_t e);

    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t e() const noexcept { return e_; }
    unsigned bit_length() const noexcept { return l_; }
    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t q() const noexcept { return q_; }
    std::uint64_t phi() const noexcept { return (p_ - 1) * (q_ - 1); }
    /// lcm(p-1, q-1)
    std::uint64_t carmichael() const noexcept;
    std::uint64_t private_exponent() const;

private:
    std::uint64_t n_, e_, p_ = 0, q_ = 0;
    unsigned l_;
};

/// F(x) = ([x] mod n)^e mod n on l = bitlen(n) bits.
BlackBoxMap rsa_enc_map(const RsaParams& params);

/// F(x) = c^[x] mod n on l bits, exponent taken as the full integer [x].
/// Requires gcd(c, n) = 1.
BlackBoxMap rsa_cca_map(const RsaParams& params, const IntMod& c);

/// Prime p < 2^24 with a primitive root a.
class DlpParams {
public:
    DlpParams(std::uint64_t p, std::uint64_t a);

    std::uint64_t p() const noexcept { return p_; }
    std::uint64_t base() const noexcept { return a_; }
    unsigned bit_length() const noexcept { return l_; }

private:
    std::uint64_t p_, a_;
    unsigned l_;
};

/// [x] reduced to [1, p-1] (mod p-1, residue 0 -> p-1).
std::uint64_t dlp_exponent(const DlpParams& params, std::uint64_t x);

/// F(x) = a^{dlp_exponent([x])} mod p on l = bitlen(p) bits.
BlackBoxMap dlp_map(const DlpParams& params);

}  // namespace bbi::targets
