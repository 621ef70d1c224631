#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bbi/bitvec.hpp"
#include "bbi/blackbox.hpp"
#include "bbi/seqengine.hpp"

namespace bbi {

/// Sliding window Pi_i selecting output coordinates i .. i+n-1 (1-based),
/// i.e. bit indices i-1 .. i+n-2.
struct ProjectionWindow {
    std::size_t index;
};

/// Number of windows m - n + 1 for an n -> m map.
std::size_t window_count(const BlackBoxMap& f);

BitVec project(const BitVec& y, std::size_t n, ProjectionWindow w);

/// The regular map Pi_i o F; one evaluation of F per evaluation.
BlackBoxMap composed_map(const BlackBoxMap& f, ProjectionWindow w);

struct EmbeddingReport {
    InversionReport report;            // map_evals counts evaluations of F across all windows
    std::optional<std::size_t> window;  // winning window index when solved
    std::vector<std::size_t> windows_tried;
    /// Verified solutions from later windows that differ from the winner
    /// (only populated with scan_all).
    std::vector<std::pair<std::size_t, BitVec>> alternatives;
};

struct EmbeddingOptions {
    InversionOptions inversion;
    /// Keep scanning after the first verified window to surface alternatives.
    bool scan_all = false;
};

/// Local inversion of an embedding F: n -> m (m > n) by scanning windows in
/// ascending order; a window's candidate is accepted only if F(x) = y on all
/// m output bits.
EmbeddingReport invert_embedding(const BlackBoxMap& f, const BitVec& y, std::size_t m_terms,
                                 const EmbeddingOptions& opts = {});

}  // namespace bbi
