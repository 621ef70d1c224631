#pragma once

#include <cstdint>
#include <vector>

namespace bbi {

/// Residue modulo a positive modulus, always fully reduced.
class IntMod {
public:
    IntMod(std::uint64_t value, std::uint64_t modulus);

    std::uint64_t value() const noexcept { return value_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    IntMod pow(std::uint64_t exponent) const;

    friend IntMod operator*(const IntMod& a, const IntMod& b);
    friend IntMod operator+(const IntMod& a, const IntMod& b);
    friend bool operator==(const IntMod&, const IntMod&) noexcept = default;

private:
    std::uint64_t value_;
    std::uint64_t modulus_;
};

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
/// Inverse of a modulo m; throws std::domain_error when gcd(a, m) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);
/// Deterministic for all 64-bit inputs.
bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending (trial division; desk-scale inputs).
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::uint64_t mult_order(std::uint64_t a, std::uint64_t m);
bool is_primitive_root(std::uint64_t a, std::uint64_t p);
/// Number of bits needed to write n (0 for n = 0).
unsigned bit_length(std::uint64_t n);

}  // namespace nt

}  // namespace bbi
