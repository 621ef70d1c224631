#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <json.hpp>

#include "bbi/blackbox.hpp"

namespace bbi::cli {

/// One surveyed point. `lc` is empty when the window saturated (no unique
/// minimal polynomial); `period` is empty when it is unknown.
struct SurveyRecord {
    BitVec seed;
    bool periodic = false;
    std::optional<std::size_t> lc;
    std::optional<std::uint64_t> period;
    bool inverted = false;
    std::uint64_t evals = 0;
};

struct SurveyOptions {
    std::size_t samples = 4096;
    bool exhaustive = false;
    std::size_t window = 0;  // 0 selects default_window
    std::uint64_t seed = 0;
    unsigned jobs = 1;
};

/// Distinct points of GF(2)^width, ascending. Exhaustive when requested or
/// when `samples` covers the whole space; otherwise mt19937_64(seed) draws
/// reduced mod 2^width, duplicates skipped.
std::vector<BitVec> survey_points(std::size_t width, std::size_t samples, bool exhaustive, std::uint64_t seed);

/// Regular maps are surveyed at sampled y. For an embedding the sampled
/// points are inputs x and the surveyed point is y = F(x); that evaluation
/// is not counted in `evals`.
///
/// periodic: the point was inverted, or y recurs inside the window.
/// period: first return of y inside the window, else the order of the
/// minimal polynomial.
std::vector<SurveyRecord> run_survey(const BlackBoxMap& f, const SurveyOptions& opts);

void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& rows);

/// LC histogram (key "saturated" for saturated windows), mean LC over the
/// unsaturated rows and the fraction of all rows with LC <= threshold.
nlohmann::ordered_json survey_summary(const std::vector<SurveyRecord>& rows, std::size_t window, std::size_t threshold);

}  // namespace bbi::cli
