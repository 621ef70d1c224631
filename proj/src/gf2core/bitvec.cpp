#include "bbi/bitvec.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace bbi {

namespace {

std::size_t words_for(std::size_t bits) { return (bits + BitVec::kWordBits - 1) / BitVec::kWordBits; }

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    return -1;
}

}  // namespace

BitVec::BitVec(std::size_t width) : width_(width), words_(words_for(width), 0) {
    if (width == 0) throw std::invalid_argument("BitVec: width must be >= 1");
}

BitVec BitVec::from_uint(std::uint64_t value, std::size_t width) {
    BitVec v(width);
    if (width < kWordBits && (value >> width) != 0)
        throw std::invalid_argument("BitVec: value " + std::to_string(value) + " does not fit in " +
                                    std::to_string(width) + " bits");
    v.words_[0] = value;
    return v;
}

BitVec BitVec::from_hex(std::string_view hex, std::size_t width) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty()) throw std::invalid_argument("BitVec: empty hex string");
    BitVec v(width);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, bit += 4) {
        if (*it == '_') {
            bit -= 4;
            continue;
        }
        const int d = hex_digit(*it);
        if (d < 0) throw std::invalid_argument("BitVec: malformed hex string '" + std::string(hex) + "'");
        for (int j = 0; j < 4; ++j) {
            if (((d >> j) & 1) == 0) continue;
            if (bit + j >= width)
                throw std::invalid_argument("BitVec: hex value 0x" + std::string(hex) + " does not fit in " +
                                            std::to_string(width) + " bits");
            v.set(bit + j, true);
        }
    }
    return v;
}

BitVec BitVec::parse(std::string_view text, std::size_t width) {
    if (text.starts_with("0x") || text.starts_with("0X")) return from_hex(text, width);
    if (text.empty()) throw std::invalid_argument("BitVec: empty value");
    std::uint64_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') throw std::invalid_argument("BitVec: malformed number '" + std::string(text) + "'");
        const std::uint64_t next = value * 10 + static_cast<std::uint64_t>(c - '0');
        if (next / 10 != value) throw std::invalid_argument("BitVec: number out of range");
        value = next;
    }
    return from_uint(value, width);
}

BitVec BitVec::from_bit_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVec: bit string may only contain 0 and 1");
    }
    return v;
}

bool BitVec::get(std::size_t i) const {
    if (i >= width_) throw std::out_of_range("BitVec::get: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
}

void BitVec::set(std::size_t i, bool value) {
    if (i >= width_) throw std::out_of_range("BitVec::set: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool BitVec::is_zero() const noexcept {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

std::size_t BitVec::popcount() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::uint64_t BitVec::to_uint() const {
    if (width_ > kWordBits) throw std::domain_error("BitVec::to_uint: width exceeds 64 bits");
    return words_[0];
}

std::string BitVec::to_hex() const {
    const std::size_t digits = (width_ + 3) / 4;
    std::string out = "0x";
    bool leading = true;
    for (std::size_t d = digits; d-- > 0;) {
        int nibble = 0;
        for (int j = 0; j < 4; ++j) {
            const std::size_t bit = d * 4 + j;
            if (bit < width_ && get(bit)) nibble |= 1 << j;
        }
        if (leading && nibble == 0 && d != 0) continue;
        leading = false;
        out.push_back("0123456789abcdef"[nibble]);
    }
    return out;
}

std::string BitVec::to_bit_string() const {
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

BitVec BitVec::slice(std::size_t offset, std::size_t len) const {
    if (len == 0 || offset + len > width_) throw std::out_of_range("BitVec::slice: range out of bounds");
    BitVec out(len);
    const std::size_t shift = offset % kWordBits;
    const std::size_t base = offset / kWordBits;
    for (std::size_t w = 0; w < out.words_.size(); ++w) {
        std::uint64_t lo = base + w < words_.size() ? words_[base + w] : 0;
        std::uint64_t hi = base + w + 1 < words_.size() ? words_[base + w + 1] : 0;
        out.words_[w] = shift == 0 ? lo : (lo >> shift) | (hi << (kWordBits - shift));
    }
    out.trim();
    return out;
}

BitVec BitVec::concat(const BitVec& other) const {
    BitVec out(width_ + other.width_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w];
    const std::size_t shift = width_ % kWordBits;
    const std::size_t base = width_ / kWordBits;
    for (std::size_t w = 0; w < other.words_.size(); ++w) {
        out.words_[base + w] |= other.words_[w] << shift;
        if (shift != 0 && base + w + 1 < out.words_.size()) out.words_[base + w + 1] |= other.words_[w] >> (kWordBits - shift);
    }
    return out;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (other.width_ != width_) throw std::invalid_argument("BitVec: width mismatch in xor");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

std::size_t BitVec::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ width_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

void BitVec::trim() noexcept {
    const std::size_t rem = width_ % kWordBits;
    if (rem != 0) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace bbi
