#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bbi/blackbox.hpp"

namespace bbi::targets {

BlackBoxMap identity_map(std::size_t width);
BlackBoxMap complement_map(std::size_t width);
/// new bit i = old bit (i + shift) mod width; shift 1 sends 011 to 110.
BlackBoxMap rotation_map(std::size_t width, std::size_t shift);
/// x -> (x, x), n -> 2n.
BlackBoxMap duplication_map(std::size_t width);
/// Lookup table indexed by the integer value of the input; widths <= 24.
BlackBoxMap table_map(std::size_t in_width, std::size_t out_width, std::vector<std::uint32_t> table, std::string label);

}  // namespace bbi::targets
