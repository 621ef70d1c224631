#include "bbi/cli/survey.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "bbi/embedding.hpp"
#include "bbi/seqengine.hpp"

namespace bbi::cli {

namespace {

// Wraps f so that the outputs of the first `keep` evaluations are recorded.
// Each call to survey_one builds its own recorder, so no locking is needed.
BlackBoxMap recording(const BlackBoxMap& f, std::shared_ptr<std::vector<BitVec>> log, std::size_t keep) {
    return BlackBoxMap(f.in_width(), f.out_width(), f.label(), [f, log, keep](const BitVec& x) {
        BitVec out = f(x);
        if (log->size() < keep) log->push_back(out);
        return out;
    });
}

SurveyRecord survey_regular(const BlackBoxMap& f, const BitVec& y, std::size_t window) {
    auto log = std::make_shared<std::vector<BitVec>>();
    const InversionReport r = local_inversion(recording(f, log, window - 1), y, window);

    SurveyRecord rec{y, false, std::nullopt, std::nullopt, false, 0};
    rec.inverted = r.solved();
    rec.lc = r.linear_complexity;
    rec.evals = r.map_evals;
    const auto back = std::find(log->begin(), log->end(), y);
    if (back != log->end()) rec.period = static_cast<std::uint64_t>(back - log->begin()) + 1;
    rec.periodic = rec.inverted || rec.period.has_value();
    if (!rec.period) rec.period = r.period_estimate;
    return rec;
}

SurveyRecord survey_embedding(const BlackBoxMap& f, const BitVec& x, std::size_t window) {
    const BitVec y = f(x);
    const EmbeddingReport e = invert_embedding(f, y, window);
    SurveyRecord rec{y, false, std::nullopt, std::nullopt, false, 0};
    rec.inverted = e.report.solved();
    rec.periodic = rec.inverted;
    rec.lc = e.report.linear_complexity;
    rec.period = e.report.period_estimate;
    rec.evals = e.report.map_evals;
    return rec;
}

}  // namespace

std::vector<BitVec> survey_points(std::size_t width, std::size_t samples, bool exhaustive, std::uint64_t seed) {
    if (width == 0 || width > 32) throw std::invalid_argument("survey: point width must be in [1, 32]");
    const std::uint64_t space = std::uint64_t{1} << width;
    std::vector<std::uint64_t> values;
    if (exhaustive || samples >= space) {
        if (width > 24) throw std::invalid_argument("survey: exhaustive runs are limited to 24-bit domains");
        values.resize(space);
        for (std::uint64_t v = 0; v < space; ++v) values[v] = v;
    } else {
        std::mt19937_64 rng(seed);
        std::unordered_set<std::uint64_t> seen;
        while (values.size() < samples) {
            const std::uint64_t v = rng() % space;
            if (seen.insert(v).second) values.push_back(v);
        }
        std::sort(values.begin(), values.end());
    }
    std::vector<BitVec> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(BitVec::from_uint(v, width));
    return out;
}

std::vector<SurveyRecord> run_survey(const BlackBoxMap& f, const SurveyOptions& opts) {
    const std::size_t window = opts.window == 0 ? default_window(f) : opts.window;
    if (window < 2) throw std::invalid_argument("survey: window M must be >= 2");
    if (!f.is_regular() && !f.is_embedding()) throw std::invalid_argument("survey: map must be regular or an embedding");

    const std::vector<BitVec> points = survey_points(f.in_width(), opts.samples, opts.exhaustive, opts.seed);
    std::vector<std::optional<SurveyRecord>> slots(points.size());
    auto work = [&](std::size_t i) {
        slots[i] = f.is_regular() ? survey_regular(f, points[i], window) : survey_embedding(f, points[i], window);
    };

    const unsigned jobs = std::max(1U, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < points.size(); ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        std::exception_ptr failure;
        std::mutex failure_mu;
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < points.size(); i += jobs) work(i);
                } catch (...) {
                    std::lock_guard lock(failure_mu);
                    if (!failure) failure = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::vector<SurveyRecord> rows;
    rows.reserve(slots.size());
    for (auto& s : slots) rows.push_back(std::move(*s));
    // embeddings survey F(x), so restore the by-seed order
    std::stable_sort(rows.begin(), rows.end(), [](const SurveyRecord& a, const SurveyRecord& b) {
        if (a.seed.width() <= 64) return a.seed.to_uint() < b.seed.to_uint();
        return a.seed.to_bit_string() < b.seed.to_bit_string();
    });
    return rows;
}

void write_survey_csv(std::ostream& out, const std::vector<SurveyRecord>& rows) {
    out << "seed,periodic,LC,period,inverted,evals\n";
    for (const auto& r : rows) {
        out << r.seed.to_hex() << ',' << (r.periodic ? "true" : "false") << ',';
        if (r.lc)
            out << *r.lc;
        else
            out << "saturated";
        out << ',';
        if (r.period)
            out << *r.period;
        else
            out << "unknown";
        out << ',' << (r.inverted ? "true" : "false") << ',' << r.evals << '\n';
    }
}

nlohmann::ordered_json survey_summary(const std::vector<SurveyRecord>& rows, std::size_t window, std::size_t threshold) {
    std::map<std::size_t, std::size_t> hist;
    std::size_t saturated = 0, periodic = 0, inverted = 0, low = 0;
    double lc_sum = 0;
    for (const auto& r : rows) {
        if (r.lc) {
            ++hist[*r.lc];
            lc_sum += static_cast<double>(*r.lc);
            if (*r.lc <= threshold) ++low;
        } else {
            ++saturated;
        }
        periodic += r.periodic;
        inverted += r.inverted;
    }
    const double n = rows.empty() ? 1.0 : static_cast<double>(rows.size());
    nlohmann::ordered_json h = nlohmann::ordered_json::object();
    for (const auto& [lc, count] : hist) h[std::to_string(lc)] = count;
    h["saturated"] = saturated;

    nlohmann::ordered_json j;
    j["points"] = rows.size();
    j["M"] = window;
    j["threshold"] = threshold;
    j["lc_histogram"] = std::move(h);
    const std::size_t measured = rows.size() - saturated;
    j["mean_lc"] = measured ? nlohmann::ordered_json(lc_sum / static_cast<double>(measured)) : nlohmann::ordered_json(nullptr);
    j["fraction_lc_at_most_threshold"] = static_cast<double>(low) / n;
    j["fraction_periodic"] = static_cast<double>(periodic) / n;
    j["fraction_inverted"] = static_cast<double>(inverted) / n;
    return j;
}

}  // namespace bbi::cli
