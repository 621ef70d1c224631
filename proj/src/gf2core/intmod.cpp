#include "bbi/intmod.hpp"

#include <bit>
#include <stdexcept>

namespace bbi {

IntMod::IntMod(std::uint64_t value, std::uint64_t modulus) : value_(0), modulus_(modulus) {
    if (modulus == 0) throw std::invalid_argument("IntMod: modulus must be positive");
    value_ = value % modulus;
}

IntMod IntMod::pow(std::uint64_t exponent) const { return {nt::powmod(value_, exponent, modulus_), modulus_}; }

IntMod operator*(const IntMod& a, const IntMod& b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("IntMod: modulus mismatch");
    return {nt::mulmod(a.value_, b.value_, a.modulus_), a.modulus_};
}

IntMod operator+(const IntMod& a, const IntMod& b) {
    if (a.modulus_ != b.modulus_) throw std::invalid_argument("IntMod: modulus mismatch");
    const auto s = static_cast<unsigned __int128>(a.value_) + b.value_;
    return {static_cast<std::uint64_t>(s % a.modulus_), a.modulus_};
}

namespace nt {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        const std::uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
    if (m == 0) throw std::domain_error("invmod: zero modulus");
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        const __int128 q = r / new_r;
        const __int128 tt = t - q * new_t;
        t = new_t;
        new_t = tt;
        const __int128 rr = r - q * new_r;
        r = new_r;
        new_r = rr;
    }
    if (r != 1) throw std::domain_error("invmod: argument not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t mult_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    if (gcd(a, m) != 1) throw std::domain_error("mult_order: argument not coprime to modulus");
    // Carmichael-free route: order divides phi(m), computed from the factorization of m.
    std::uint64_t phi = m;
    for (auto p : prime_factors(m)) phi = phi / p * (p - 1);
    std::uint64_t order = phi;
    for (auto q : prime_factors(phi)) {
        while (order % q == 0 && powmod(a, order / q, m) == 1) order /= q;
    }
    return order;
}

bool is_primitive_root(std::uint64_t a, std::uint64_t p) {
    if (!is_prime(p)) return false;
    a %= p;
    if (a == 0) return false;
    for (auto q : prime_factors(p - 1))
        if (powmod(a, (p - 1) / q, p) == 1) return false;
    return true;
}

unsigned bit_length(std::uint64_t n) { return static_cast<unsigned>(std::bit_width(n)); }

}  // namespace nt

}  // namespace bbi
