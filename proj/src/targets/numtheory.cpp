#include "bbi/targets/numtheory.hpp"

#include <cstdio>
#include <stdexcept>
#include <string>

namespace bbi::targets {

namespace {

constexpr std::uint64_t kDeskLimit = std::uint64_t{1} << 24;

std::string hex(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(v));
    return buf;
}

}  // namespace

RsaParams::RsaParams(std::uint64_t n, std::uint64_t e) : n_(n), e_(e), l_(nt::bit_length(n)) {
    if (n < 15 || n >= kDeskLimit) throw std::invalid_argument("rsa: modulus outside the desk-scale range [15, 2^24)");
    const auto factors = nt::prime_factors(n);
    if (factors.size() != 2 || factors[0] * factors[1] != n || factors[0] == 2)
        throw std::invalid_argument("rsa: modulus " + std::to_string(n) + " is not a product of two distinct odd primes");
    p_ = factors[0];
    q_ = factors[1];
    if (e < 2 || nt::gcd(e, phi()) != 1) throw std::invalid_argument("rsa: gcd(e, phi(n)) != 1");
}

RsaParams RsaParams::from_primes(std::uint64_t p, std::uint64_t q, std::uint64_t e) {
    if (!nt::is_prime(p) || !nt::is_prime(q) || p == q) throw std::invalid_argument("rsa: p and q must be distinct primes");
    return RsaParams(p * q, e);
}

std::uint64_t RsaParams::carmichael() const noexcept {
    const std::uint64_t a = p_ - 1, b = q_ - 1;
    return a / nt::gcd(a, b) * b;
}

std::uint64_t RsaParams::private_exponent() const { return nt::invmod(e_ % phi(), phi()); }

BlackBoxMap rsa_enc_map(const RsaParams& params) {
    const std::uint64_t n = params.n(), e = params.e();
    const unsigned l = params.bit_length();
    return BlackBoxMap(l, l, "rsa[n=" + hex(n) + ",e=" + hex(e) + "]", [n, e, l](const BitVec& x) {
        return BitVec::from_uint(nt::powmod(x.to_uint() % n, e, n), l);
    });
}

BlackBoxMap rsa_cca_map(const RsaParams& params, const IntMod& c) {
    const std::uint64_t n = params.n();
    if (c.modulus() != n) throw std::invalid_argument("rsa_cca_map: ciphertext modulus mismatch");
    if (nt::gcd(c.value(), n) != 1) throw std::invalid_argument("rsa_cca_map: ciphertext not coprime to n");
    const unsigned l = params.bit_length();
    const std::uint64_t cv = c.value();
    return BlackBoxMap(l, l, "rsa-cca[n=" + hex(n) + ",c=" + hex(cv) + "]", [n, cv, l](const BitVec& x) {
        return BitVec::from_uint(nt::powmod(cv, x.to_uint(), n), l);
    });
}

DlpParams::DlpParams(std::uint64_t p, std::uint64_t a) : p_(p), a_(a), l_(nt::bit_length(p)) {
    if (p < 3 || p >= kDeskLimit || !nt::is_prime(p)) throw std::invalid_argument("dlp: p must be a prime in [3, 2^24)");
    if (a == 0 || a >= p || !nt::is_primitive_root(a, p))
        throw std::invalid_argument("dlp: " + std::to_string(a) + " is not a primitive root mod " + std::to_string(p));
}

std::uint64_t dlp_exponent(const DlpParams& params, std::uint64_t x) {
    const std::uint64_t r = x % (params.p() - 1);
    return r == 0 ? params.p() - 1 : r;
}

BlackBoxMap dlp_map(const DlpParams& params) {
    const unsigned l = params.bit_length();
    return BlackBoxMap(l, l, "dlp[p=" + hex(params.p()) + ",a=" + hex(params.base()) + "]", [params, l](const BitVec& x) {
        return BitVec::from_uint(nt::powmod(params.base(), dlp_exponent(params, x.to_uint()), params.p()), l);
    });
}

}  // namespace bbi::targets
