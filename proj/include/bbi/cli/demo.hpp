#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bbi::cli {

std::vector<std::string> demo_names();

/// Runs one end-to-end scenario on the shipped parameters and prints a
/// transcript. Returns true iff the recovered inverse verified. `seed`
/// drives the random test ciphertexts of rsa-cca.
bool run_demo(const std::string& name, std::ostream& out, std::uint64_t seed = 0);

}  // namespace bbi::cli
