#include "bbi/targets/simple.hpp"

#include <memory>
#include <stdexcept>

namespace bbi::targets {

BlackBoxMap identity_map(std::size_t width) {
    return BlackBoxMap(width, width, "identity" + std::to_string(width), [](const BitVec& x) { return x; });
}

BlackBoxMap complement_map(std::size_t width) {
    return BlackBoxMap(width, width, "not" + std::to_string(width), [width](const BitVec& x) {
        BitVec y = x;
        for (std::size_t i = 0; i < width; ++i) y.set(i, !x.get(i));
        return y;
    });
}

BlackBoxMap rotation_map(std::size_t width, std::size_t shift) {
    return BlackBoxMap(width, width, "rot" + std::to_string(width) + "_" + std::to_string(shift),
                       [width, shift](const BitVec& x) {
                           BitVec y(width);
                           for (std::size_t i = 0; i < width; ++i) y.set(i, x.get((i + shift) % width));
                           return y;
                       });
}

BlackBoxMap duplication_map(std::size_t width) {
    return BlackBoxMap(width, 2 * width, "dup" + std::to_string(width), [](const BitVec& x) { return x.concat(x); });
}

BlackBoxMap table_map(std::size_t in_width, std::size_t out_width, std::vector<std::uint32_t> table, std::string label) {
    if (in_width > 24 || out_width > 32) throw std::invalid_argument("table_map: widths too large");
    if (table.size() != (std::size_t{1} << in_width)) throw std::invalid_argument("table_map: table size must be 2^in_width");
    for (auto v : table)
        if (out_width < 32 && (v >> out_width) != 0) throw std::invalid_argument("table_map: entry exceeds output width");
    auto shared = std::make_shared<const std::vector<std::uint32_t>>(std::move(table));
    return BlackBoxMap(in_width, out_width, std::move(label), [shared, out_width](const BitVec& x) {
        return BitVec::from_uint((*shared)[x.to_uint()], out_width);
    });
}

}  // namespace bbi::targets
