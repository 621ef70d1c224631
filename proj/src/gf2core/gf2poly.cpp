#include "bbi/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bbi {

namespace {

constexpr std::size_t kW = 64;

// dst ^= src << shift (dst sized by caller)
void xor_shifted(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src, std::size_t shift) {
    const std::size_t ws = shift / kW;
    const std::size_t bs = shift % kW;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        if (bs != 0 && i + ws + 1 < dst.size()) dst[i + ws + 1] ^= src[i] >> (kW - bs);
    }
}

}  // namespace

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
    Gf2Poly p;
    p.set_coeff(degree, true);
    return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<std::size_t> exps) {
    return from_exponents(std::vector<std::size_t>(exps));
}

Gf2Poly Gf2Poly::from_exponents(const std::vector<std::size_t>& exps) {
    Gf2Poly p;
    for (auto e : exps) p.set_coeff(e, !p.coeff(e));
    return p;
}

Gf2Poly Gf2Poly::from_mask(std::uint64_t mask) {
    Gf2Poly p;
    if (mask != 0) p.words_.push_back(mask);
    return p;
}

Gf2Poly Gf2Poly::from_hex(const std::string& hex) {
    std::string_view s = hex;
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.empty()) throw std::invalid_argument("Gf2Poly: empty hex string");
    Gf2Poly p;
    std::size_t bit = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it, bit += 4) {
        const char c = *it;
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw std::invalid_argument("Gf2Poly: malformed hex string '" + hex + "'");
        for (int j = 0; j < 4; ++j)
            if ((d >> j) & 1) p.set_coeff(bit + j, true);
    }
    return p;
}

int Gf2Poly::degree() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<int>((words_.size() - 1) * kW + (kW - 1 - std::countl_zero(words_.back())));
}

bool Gf2Poly::coeff(std::size_t i) const noexcept {
    const std::size_t w = i / kW;
    return w < words_.size() && ((words_[w] >> (i % kW)) & 1U);
}

void Gf2Poly::set_coeff(std::size_t i, bool value) {
    const std::size_t w = i / kW;
    if (w >= words_.size()) {
        if (!value) return;
        words_.resize(w + 1, 0);
    }
    const std::uint64_t mask = std::uint64_t{1} << (i % kW);
    if (value)
        words_[w] |= mask;
    else
        words_[w] &= ~mask;
    trim();
}

std::vector<std::size_t> Gf2Poly::exponents() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t bits = words_[w];
        while (bits != 0) {
            out.push_back(w * kW + static_cast<std::size_t>(std::countr_zero(bits)));
            bits &= bits - 1;
        }
    }
    return out;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    auto exps = exponents();
    std::string out;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
        if (!out.empty()) out += "+";
        if (*it == 0)
            out += "1";
        else if (*it == 1)
            out += "X";
        else
            out += "X^" + std::to_string(*it);
    }
    return out;
}

std::string Gf2Poly::to_hex() const {
    if (is_zero()) return "0x0";
    std::string out = "0x";
    const int deg = degree();
    for (int d = deg / 4; d >= 0; --d) {
        int nibble = 0;
        for (int j = 0; j < 4; ++j)
            if (coeff(static_cast<std::size_t>(d * 4 + j))) nibble |= 1 << j;
        out.push_back("0123456789abcdef"[nibble]);
    }
    return out;
}

Gf2Poly& Gf2Poly::operator+=(const Gf2Poly& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] ^= other.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Poly out;
    out.words_.assign(a.words_.size() + b.words_.size(), 0);
    for (auto e : a.exponents()) xor_shifted(out.words_, b.words_, e);
    out.trim();
    return out;
}

Gf2Poly Gf2Poly::shifted(std::size_t k) const {
    if (is_zero()) return {};
    Gf2Poly out;
    out.words_.assign(words_.size() + k / kW + 1, 0);
    xor_shifted(out.words_, words_, k);
    out.trim();
    return out;
}

void Gf2Poly::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly poly_add(const Gf2Poly& a, const Gf2Poly& b) { return a + b; }

Gf2Poly poly_mul(const Gf2Poly& a, const Gf2Poly& b) { return a * b; }

std::pair<Gf2Poly, Gf2Poly> poly_divmod(const Gf2Poly& a, const Gf2Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by the zero polynomial");
    Gf2Poly q;
    Gf2Poly r = a;
    const int db = b.degree();
    int dr = r.degree();
    if (dr < db) return {q, r};
    q.words_.assign(static_cast<std::size_t>(dr - db) / kW + 1, 0);
    while (dr >= db) {
        const auto shift = static_cast<std::size_t>(dr - db);
        q.words_[shift / kW] |= std::uint64_t{1} << (shift % kW);
        xor_shifted(r.words_, b.words_, shift);
        // the xor cleared bit dr; find the next leading coefficient
        auto w = static_cast<std::size_t>(dr) / kW;
        while (true) {
            if (r.words_[w] != 0) {
                dr = static_cast<int>(w * kW + (kW - 1 - std::countl_zero(r.words_[w])));
                break;
            }
            if (w == 0) {
                dr = -1;
                break;
            }
            --w;
        }
    }
    r.trim();
    q.trim();
    return {q, r};
}

Gf2Poly poly_mod(const Gf2Poly& a, const Gf2Poly& b) { return poly_divmod(a, b).second; }

Gf2Poly poly_mulmod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& modp) {
    if (modp.degree() < 1) throw std::domain_error("poly_mulmod: modulus must have degree >= 1");
    return poly_mod(poly_mod(a, modp) * poly_mod(b, modp), modp);
}

Gf2Poly poly_gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: both arguments are zero");
    while (!b.is_zero()) {
        Gf2Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly poly_lcm(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_lcm: both arguments are zero");
    if (a.is_zero() || b.is_zero()) return {};
    return poly_divmod(a, poly_gcd(a, b)).first * b;
}

std::optional<std::uint64_t> poly_order(const Gf2Poly& p, std::uint64_t bound) {
    const int d = p.degree();
    if (d < 1) throw std::domain_error("poly_order: polynomial must have degree >= 1");
    if (!p.coeff(0)) throw std::domain_error("poly_order: p(0) = 0, order undefined");
    if (bound < 1) throw std::domain_error("poly_order: bound must be >= 1");

    // Iterate cur <- cur * X mod p, which is poly_mulmod(cur, X, p) without the
    // general division.
    const std::size_t nwords = static_cast<std::size_t>(d) / kW + 1;
    std::vector<std::uint64_t> mod(nwords, 0);
    std::copy(p.words().begin(), p.words().end(), mod.begin());
    std::vector<std::uint64_t> cur(nwords, 0);
    cur[0] = 1;
    const std::size_t top_word = static_cast<std::size_t>(d) / kW;
    const std::uint64_t top_mask = std::uint64_t{1} << (static_cast<std::size_t>(d) % kW);

    for (std::uint64_t n = 1; n <= bound; ++n) {
        std::uint64_t carry = 0;
        for (std::size_t w = 0; w < nwords; ++w) {
            const std::uint64_t next = cur[w] >> (kW - 1);
            cur[w] = (cur[w] << 1) | carry;
            carry = next;
        }
        if (cur[top_word] & top_mask)
            for (std::size_t w = 0; w < nwords; ++w) cur[w] ^= mod[w];
        if (cur[0] == 1 && std::all_of(cur.begin() + 1, cur.end(), [](std::uint64_t w) { return w == 0; })) return n;
    }
    return std::nullopt;
}

}  // namespace bbi
