#pragma once

#include <cstdint>
#include <optional>

#include "bbi/blackbox.hpp"

namespace bbi::targets {

struct ECPoint {
    bool infinity = true;
    std::uint64_t x = 0;
    std::uint64_t y = 0;

    static ECPoint at_infinity() { return {}; }
    static ECPoint affine(std::uint64_t x, std::uint64_t y) { return {false, x, y}; }

    friend bool operator==(const ECPoint&, const ECPoint&) noexcept = default;
};

/// y^2 = x^3 + A x + B over F_q, q > 4 prime, nonzero discriminant.
struct Curve {
    std::uint64_t q;
    std::uint64_t a;
    std::uint64_t b;

    Curve(std::uint64_t q, std::uint64_t a, std::uint64_t b);
    bool contains(const ECPoint& p) const noexcept;
    ECPoint negate(const ECPoint& p) const;
    /// #E(F_q) by exhaustive enumeration, point at infinity included.
    std::uint64_t count_points() const;
};

/// Curve with a base point and the derived bit widths of the ECDLP map.
struct CurveParams {
    Curve curve;
    ECPoint base;
    std::uint64_t group_order;  // #E
    std::uint64_t base_order;   // n_P
    unsigned r;                 // input width, 1 + floor(log2 n_P)
    unsigned coord_bits;        // bits per coordinate, bitlen(q - 1)
    unsigned l;                 // 1 + floor(log2(2q))

    unsigned out_width() const noexcept { return 2 * coord_bits; }
};

/// Enumerates the group and the order of `base`; checks the Hasse bound.
CurveParams make_curve_params(std::uint64_t q, std::uint64_t a, std::uint64_t b, ECPoint base);

ECPoint ec_add(const Curve& c, const ECPoint& p1, const ECPoint& p2);
ECPoint ec_scalar_mul(const Curve& c, std::uint64_t k, const ECPoint& p);

/// x coordinate in the low coord_bits, y coordinate above. Infinity has no
/// encoding.
BitVec encode_point(const CurveParams& c, const ECPoint& p);
/// Inverse of encode_point; nullopt when the pattern is not a curve point.
std::optional<ECPoint> decode_point(const CurveParams& c, const BitVec& bits);

/// [x] reduced into [1, n_P - 1]: mod n_P with residue 0 mapped to n_P - 1.
std::uint64_t ecdlp_multiplier(const CurveParams& c, std::uint64_t x);

/// F_P(x) = encode([ecdlp_multiplier(x)] P), r -> 2 coord_bits.
BlackBoxMap ecdlp_map(const CurveParams& c);

}  // namespace bbi::targets
