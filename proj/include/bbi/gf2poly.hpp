#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bbi {

/// Polynomial over GF(2), dense, coefficients packed lowest degree first.
///
/// Always trimmed: the highest stored coefficient of a nonzero polynomial is
/// 1, so every nonzero value is monic. The zero polynomial has degree -1.
class Gf2Poly {
public:
    Gf2Poly() = default;

    static Gf2Poly zero() { return {}; }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly monomial(std::size_t degree);
    /// X^e summed over the listed exponents (repeats cancel).
    static Gf2Poly from_exponents(std::initializer_list<std::size_t> exps);
    static Gf2Poly from_exponents(const std::vector<std::size_t>& exps);
    /// Bit i of `mask` is the coefficient of X^i.
    static Gf2Poly from_mask(std::uint64_t mask);
    /// Hex encoding of the coefficient mask, as produced by to_hex().
    static Gf2Poly from_hex(const std::string& hex);

    int degree() const noexcept;
    bool is_zero() const noexcept { return words_.empty(); }
    bool coeff(std::size_t i) const noexcept;
    void set_coeff(std::size_t i, bool value);

    /// Exponents with nonzero coefficient, ascending.
    std::vector<std::size_t> exponents() const;

    /// "X^3+X+1" style; "0" for the zero polynomial.
    std::string to_string() const;
    std::string to_hex() const;

    Gf2Poly& operator+=(const Gf2Poly& other);
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a += b; }
    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    /// Multiply by X^k.
    Gf2Poly shifted(std::size_t k) const;

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) noexcept = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

    friend std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b);

private:
    void trim() noexcept;

    std::vector<std::uint64_t> words_;
};

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b);

/// (quotient, remainder). Throws std::domain_error on a zero divisor.
std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b);
Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& b);

/// (a * b) mod modp; modp must have degree >= 1.
Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& modp);

/// Monic gcd / lcm; both-zero input is rejected.
Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly poly_lcm(const Gf2Poly& a, const Gf2Poly& b);

/// Smallest N in [1, bound] with X^N == 1 mod p, or nullopt when none is
/// found within the bound. Requires deg p >= 1 and p(0) = 1; p(0) = 0 means
/// the annihilated sequence is not purely periodic and is rejected.
std::optional<std::uint64_t> poly_order(const Gf2Poly& p, std::uint64_t bound = std::uint64_t{1} << 20);

}  // namespace bbi
