#include "bbi/targets/stream.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace bbi::targets {

void ToyStreamSpec::validate() const {
    if (key_width == 0) throw std::invalid_argument("stream: key width must be positive");
    if (state_width() > 64) throw std::invalid_argument("stream: state wider than 64 bits");
    if (iv_width < 64 && (iv >> iv_width) != 0) throw std::invalid_argument("stream: IV exceeds its width");
    if (feedback.degree() != static_cast<int>(state_width()))
        throw std::invalid_argument("stream: feedback degree must equal key_width + iv_width");
    if (!feedback.coeff(0)) throw std::invalid_argument("stream: feedback polynomial needs a constant term");
    if (filter.empty()) throw std::invalid_argument("stream: empty filter");
    for (auto m : filter) {
        if (m == 0) throw std::invalid_argument("stream: empty filter monomial");
        if (state_width() < 64 && (m >> state_width()) != 0) throw std::invalid_argument("stream: filter tap outside the state");
    }
}

BitVec stream_keystream(const ToyStreamSpec& spec, const BitVec& key, std::size_t count) {
    if (key.width() != spec.key_width) throw std::invalid_argument("stream_keystream: key width mismatch");
    if (count == 0) throw std::invalid_argument("stream_keystream: count must be positive");
    const unsigned width = spec.state_width();
    const std::uint64_t taps = spec.feedback.words()[0] & (width == 64 ? ~0ULL : ((1ULL << width) - 1));
    std::uint64_t state = key.to_uint() | (spec.iv << spec.key_width);

    auto clock = [&] {
        const std::uint64_t fb = static_cast<std::uint64_t>(std::popcount(state & taps) & 1);
        state = (state >> 1) | (fb << (width - 1));
    };
    auto output = [&] {
        unsigned bit = 0;
        for (auto m : spec.filter) bit ^= (state & m) == m ? 1U : 0U;
        return bit != 0;
    };

    for (unsigned i = 0; i < spec.warmup; ++i) clock();
    BitVec out(count);
    for (std::size_t t = 0; t < count; ++t) {
        out.set(t, output());
        clock();
    }
    return out;
}

BlackBoxMap stream_kpa_map(const ToyStreamSpec& spec, std::size_t count) {
    spec.validate();
    if (count < spec.key_width)
        throw std::invalid_argument("stream_kpa_map: need count >= key width (" + std::to_string(spec.key_width) + ")");
    return BlackBoxMap(spec.key_width, count, "stream-kpa[" + std::to_string(count) + "]",
                       [spec, count](const BitVec& k) { return stream_keystream(spec, k, count); });
}

}  // namespace bbi::targets
