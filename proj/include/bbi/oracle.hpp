#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "bbi/bitvec.hpp"
#include "bbi/blackbox.hpp"
#include "bbi/gf2poly.hpp"

namespace bbi::oracle {

constexpr std::size_t kMaxExhaustiveWidth = 24;

/// Pre-period r and period N of S(F, y): s_k = s_{k+N} for k >= r, both minimal.
struct OrbitProfile {
    std::uint64_t preperiod = 0;
    std::uint64_t period = 1;
    std::optional<std::vector<BitVec>> orbit_terms;  // s_0 .. s_{r+N-1} when requested

    bool periodic() const noexcept { return preperiod == 0; }
};

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Every x in the full domain with F(x) = y, ascending by integer value.
std::vector<BitVec> brute_force_invert(const BlackBoxMap& f, const BitVec& y);

/// Brent cycle detection then an exact pre-period walk.
OrbitProfile orbit_profile(const BlackBoxMap& f, const BitVec& y, std::uint64_t budget = std::uint64_t{1} << 26,
                           bool store_terms = false);

/// Exact minimal polynomial of a purely periodic S(F, y), N <= 2^16:
/// lcm over bit components b of (X^N - 1) / gcd(X^N - 1, sum_k s_k[b] X^{(N-k) mod N}).
Gf2Poly full_period_minpoly(const BlackBoxMap& f, const BitVec& y);

/// (r, N) for every point of a regular map with in_width <= 24, indexed by
/// the integer value of the point. Linear in the domain size.
struct FunctionalGraph {
    std::vector<std::uint32_t> preperiod;
    std::vector<std::uint32_t> period;
};
FunctionalGraph functional_graph(const BlackBoxMap& f);

}  // namespace bbi::oracle
