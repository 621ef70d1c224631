#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bbi {

/// Element of GF(2)^n.
///
/// Bit order is little-endian throughout the library: coordinate index 0 is
/// the least significant bit of the integer encoding, so the radix maps
/// (x) and [x] used by the number-theoretic targets are plain shifts.
/// Bit strings are written coordinate 0 first ("10110" has bit 0 set).
class BitVec {
public:
    static constexpr std::size_t kWordBits = 64;

    explicit BitVec(std::size_t width);

    static BitVec from_uint(std::uint64_t value, std::size_t width);
    /// Accepts "0x..." hex or plain decimal; the value must fit the width.
    static BitVec parse(std::string_view text, std::size_t width);
    static BitVec from_hex(std::string_view hex, std::size_t width);
    /// Coordinate-ordered string of '0'/'1', index 0 first.
    static BitVec from_bit_string(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::size_t word_count() const noexcept { return words_.size(); }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;

    /// Integer encoding; requires width <= 64.
    std::uint64_t to_uint() const;
    std::string to_hex() const;
    std::string to_bit_string() const;

    /// Coordinates [offset, offset + len).
    BitVec slice(std::size_t offset, std::size_t len) const;
    /// this in the low coordinates, other above it.
    BitVec concat(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend bool operator==(const BitVec& a, const BitVec& b) noexcept = default;

    std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    std::size_t width_;
    std::vector<std::uint64_t> words_;
};

}  // namespace bbi

template <>
struct std::hash<bbi::BitVec> {
    std::size_t operator()(const bbi::BitVec& v) const noexcept { return v.hash(); }
};
