#include "bbi/targets/ecc.hpp"

#include <cstdio>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "bbi/intmod.hpp"

namespace bbi::targets {

namespace {

std::uint64_t rhs(const Curve& c, std::uint64_t x) {
    const std::uint64_t x3 = nt::mulmod(nt::mulmod(x, x, c.q), x, c.q);
    return (x3 + nt::mulmod(c.a, x, c.q) + c.b) % c.q;
}

void require_on_curve(const Curve& c, const ECPoint& p) {
    if (!c.contains(p))
        throw std::invalid_argument("ec: point (" + std::to_string(p.x) + ", " + std::to_string(p.y) + ") is not on the curve");
}

}  // namespace

Curve::Curve(std::uint64_t q_, std::uint64_t a_, std::uint64_t b_) : q(q_), a(a_), b(b_) {
    if (q <= 4 || q >= (std::uint64_t{1} << 24) || !nt::is_prime(q)) throw std::invalid_argument("ec: q must be a prime in (4, 2^24)");
    if (a >= q || b >= q) throw std::invalid_argument("ec: coefficients must be reduced mod q");
    const std::uint64_t disc =
        (4 * nt::mulmod(nt::mulmod(a, a, q), a, q) + 27 * nt::mulmod(b, b, q)) % q;
    if (disc == 0) throw std::invalid_argument("ec: singular curve (4A^3 + 27B^2 = 0)");
}

bool Curve::contains(const ECPoint& p) const noexcept {
    if (p.infinity) return true;
    if (p.x >= q || p.y >= q) return false;
    return nt::mulmod(p.y, p.y, q) == rhs(*this, p.x);
}

ECPoint Curve::negate(const ECPoint& p) const {
    if (p.infinity) return p;
    return ECPoint::affine(p.x, (q - p.y) % q);
}

std::uint64_t Curve::count_points() const {
    std::vector<std::uint32_t> square_count(q, 0);
    for (std::uint64_t y = 0; y < q; ++y) ++square_count[nt::mulmod(y, y, q)];
    std::uint64_t count = 1;
    for (std::uint64_t x = 0; x < q; ++x) count += square_count[rhs(*this, x)];
    return count;
}

ECPoint ec_add(const Curve& c, const ECPoint& p1, const ECPoint& p2) {
    require_on_curve(c, p1);
    require_on_curve(c, p2);
    if (p1.infinity) return p2;
    if (p2.infinity) return p1;
    const std::uint64_t q = c.q;
    std::uint64_t lambda;
    if (p1.x == p2.x) {
        if ((p1.y + p2.y) % q == 0) return ECPoint::at_infinity();
        // tangent: (3x^2 + A) / 2y
        const std::uint64_t num = (3 * nt::mulmod(p1.x, p1.x, q) + c.a) % q;
        lambda = nt::mulmod(num, nt::invmod(2 * p1.y % q, q), q);
    } else {
        const std::uint64_t num = (p2.y + q - p1.y) % q;
        const std::uint64_t den = (p2.x + q - p1.x) % q;
        lambda = nt::mulmod(num, nt::invmod(den, q), q);
    }
    const std::uint64_t x3 = (nt::mulmod(lambda, lambda, q) + 2 * q - p1.x - p2.x) % q;
    const std::uint64_t y3 = (nt::mulmod(lambda, (p1.x + q - x3) % q, q) + q - p1.y) % q;
    return ECPoint::affine(x3, y3);
}

ECPoint ec_scalar_mul(const Curve& c, std::uint64_t k, const ECPoint& p) {
    require_on_curve(c, p);
    ECPoint acc = ECPoint::at_infinity();
    ECPoint addend = p;
    while (k != 0) {
        if (k & 1U) acc = ec_add(c, acc, addend);
        k >>= 1;
        if (k != 0) addend = ec_add(c, addend, addend);
    }
    return acc;
}

CurveParams make_curve_params(std::uint64_t q, std::uint64_t a, std::uint64_t b, ECPoint base) {
    Curve curve(q, a, b);
    if (base.infinity) throw std::invalid_argument("ec: base point must be affine");
    require_on_curve(curve, base);
    const std::uint64_t order = curve.count_points();
    const double hasse = 2.0 * std::sqrt(static_cast<double>(q));
    if (static_cast<double>(order) > static_cast<double>(q + 1) + hasse ||
        static_cast<double>(order) < static_cast<double>(q + 1) - hasse)
        throw std::logic_error("ec: point count violates the Hasse bound");

    // n_P is the least divisor d of #E with [d]P = O
    std::uint64_t n_p = order;
    for (auto f : nt::prime_factors(order))
        while (n_p % f == 0 && ec_scalar_mul(curve, n_p / f, base).infinity) n_p /= f;
    if (!ec_scalar_mul(curve, n_p, base).infinity) throw std::logic_error("ec: [#E]P != O");

    CurveParams c{curve, base, order, n_p, nt::bit_length(n_p), nt::bit_length(q - 1), nt::bit_length(2 * q)};
    return c;
}

BitVec encode_point(const CurveParams& c, const ECPoint& p) {
    if (p.infinity) throw std::invalid_argument("encode_point: the point at infinity has no coordinate encoding");
    require_on_curve(c.curve, p);
    return BitVec::from_uint(p.x | (p.y << c.coord_bits), c.out_width());
}

std::optional<ECPoint> decode_point(const CurveParams& c, const BitVec& bits) {
    if (bits.width() != c.out_width()) return std::nullopt;
    const std::uint64_t v = bits.to_uint();
    const std::uint64_t mask = (std::uint64_t{1} << c.coord_bits) - 1;
    const ECPoint p = ECPoint::affine(v & mask, v >> c.coord_bits);
    if (!c.curve.contains(p)) return std::nullopt;
    return p;
}

std::uint64_t ecdlp_multiplier(const CurveParams& c, std::uint64_t x) {
    const std::uint64_t m = x % c.base_order;
    return m == 0 ? c.base_order - 1 : m;
}

BlackBoxMap ecdlp_map(const CurveParams& c) {
    if (c.base_order < 2) throw std::invalid_argument("ecdlp_map: base point order must be >= 2");
    char label[96];
    std::snprintf(label, sizeof label, "ecdlp[q=%llu,A=%llu,B=%llu,P=(%llu,%llu)]", static_cast<unsigned long long>(c.curve.q),
                  static_cast<unsigned long long>(c.curve.a), static_cast<unsigned long long>(c.curve.b),
                  static_cast<unsigned long long>(c.base.x), static_cast<unsigned long long>(c.base.y));
    return BlackBoxMap(c.r, c.out_width(), label, [c](const BitVec& x) {
        return encode_point(c, ec_scalar_mul(c.curve, ecdlp_multiplier(c, x.to_uint()), c.base));
    });
}

}  // namespace bbi::targets
