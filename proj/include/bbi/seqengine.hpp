#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbi/bitvec.hpp"
#include "bbi/blackbox.hpp"
#include "bbi/gf2poly.hpp"

namespace bbi {

/// The first M terms y, F(y), ..., F^(M-1)(y) of the recurrence S(F, y).
struct RecurrenceSequence {
    std::vector<BitVec> terms;
    BitVec seed;
    std::string map_label;

    std::size_t size() const noexcept { return terms.size(); }
    std::size_t width() const noexcept { return seed.width(); }
};

enum class MinPolyStatus { Unique, RankDeficient, Saturated };

const char* to_string(MinPolyStatus s) noexcept;

struct MinPolyResult {
    std::optional<Gf2Poly> minpoly;  // monic, degree >= 1; set iff status == Unique
    MinPolyStatus status = MinPolyStatus::RankDeficient;
    std::vector<std::pair<std::size_t, std::size_t>> rank_profile;  // (k, rank H(k))
};

struct InversionReport {
    std::optional<BitVec> solution;  // present iff F(solution) == y was verified
    MinPolyStatus status = MinPolyStatus::RankDeficient;
    std::optional<Gf2Poly> minpoly;
    std::optional<std::size_t> linear_complexity;
    std::size_t terms_consumed = 0;
    std::uint64_t map_evals = 0;
    std::optional<std::uint64_t> period_estimate;

    bool solved() const noexcept { return solution.has_value(); }
};

struct InversionOptions {
    /// Cap on the poly_order search; the effective bound is min(cap, 2^deg).
    std::uint64_t order_bound_cap = std::uint64_t{1} << 20;
};

/// Default window length when the caller does not pick one: 4 * in_width.
std::size_t default_window(const BlackBoxMap& f);

/// M terms of S(F, y) using exactly M - 1 evaluations of F.
RecurrenceSequence generate(const BlackBoxMap& f, const BitVec& y, std::size_t m);

/// Least-degree recurrence of the window via the stacked Hankel systems
/// H(k) alpha = h(k+1), k = 1 .. floor(M/2), solved by incremental GF(2)
/// elimination.
MinPolyResult minimal_polynomial(const RecurrenceSequence& seq);

/// True iff Sum_i c_i terms[i + j] = 0 for every j with all indices in range.
bool annihilates(const Gf2Poly& p, const RecurrenceSequence& seq);

/// Closed-form preimage x = F^(m-1)(y) + Sum_{i=1}^{m-1} alpha_i F^(i-1)(y).
/// Rejects minpolys with a zero constant term.
BitVec invert_from_minpoly(const RecurrenceSequence& seq, const Gf2Poly& mp);

/// Minimal-polynomial local inversion of F at y from an M-term window.
/// Never returns an unverified solution; performs at most M evaluations.
InversionReport local_inversion(const BlackBoxMap& f, const BitVec& y, std::size_t m,
                                const InversionOptions& opts = {});

/// Scalar Berlekamp-Massey on one bit sequence; returns the annihilating
/// polynomial X^L C(1/X) of the shortest LFSR (1 for the zero sequence).
Gf2Poly berlekamp_massey(const std::vector<bool>& bits);

/// LCM over the bit components of per-component Berlekamp-Massey
/// polynomials. Independent oracle for minimal_polynomial.
Gf2Poly bm_crosscheck(const RecurrenceSequence& seq);

}  // namespace bbi
