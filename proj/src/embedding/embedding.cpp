#include "bbi/embedding.hpp"

#include <stdexcept>
#include <string>

namespace bbi {

std::size_t window_count(const BlackBoxMap& f) {
    if (f.out_width() < f.in_width()) throw std::invalid_argument("window_count: output narrower than input");
    return f.out_width() - f.in_width() + 1;
}

BitVec project(const BitVec& y, std::size_t n, ProjectionWindow w) {
    if (n == 0 || n > y.width()) throw std::invalid_argument("project: window length out of range");
    if (w.index < 1 || w.index > y.width() - n + 1)
        throw std::out_of_range("project: window index " + std::to_string(w.index) + " out of range [1, " +
                                std::to_string(y.width() - n + 1) + "]");
    return y.slice(w.index - 1, n);
}

BlackBoxMap composed_map(const BlackBoxMap& f, ProjectionWindow w) {
    const std::size_t n = f.in_width();
    if (w.index < 1 || w.index > window_count(f)) throw std::out_of_range("composed_map: window index out of range");
    return BlackBoxMap(n, n, f.label() + "|pi" + std::to_string(w.index),
                       [f, n, w](const BitVec& x) { return project(f(x), n, w); });
}

EmbeddingReport invert_embedding(const BlackBoxMap& f, const BitVec& y, std::size_t m_terms,
                                 const EmbeddingOptions& opts) {
    if (!f.is_embedding()) throw std::invalid_argument("invert_embedding: map '" + f.label() + "' is not an embedding");
    if (y.width() != f.out_width()) throw std::invalid_argument("invert_embedding: y width does not match the map");
    const std::size_t n = f.in_width();
    EmbeddingReport out;
    std::optional<InversionReport> last;
    std::uint64_t evals = 0;

    for (std::size_t i = 1; i <= window_count(f); ++i) {
        const ProjectionWindow w{i};
        InversionReport r = local_inversion(composed_map(f, w), project(y, n, w), m_terms, opts.inversion);
        out.windows_tried.push_back(i);
        evals += r.map_evals;
        if (r.solved()) {
            ++evals;
            if (f(*r.solution) != y) r.solution.reset();
        }
        if (r.solved()) {
            if (!out.window) {
                out.window = i;
                out.report = r;
                if (!opts.scan_all) break;
            } else if (*r.solution != *out.report.solution) {
                out.alternatives.emplace_back(i, *r.solution);
            }
        } else if (!out.window) {
            // keep the lowest-LC failed window for the report
            const bool better = !last || (r.linear_complexity &&
                                          (!last->linear_complexity || *r.linear_complexity < *last->linear_complexity));
            if (better) last = std::move(r);
        }
    }
    if (!out.window && last) {
        out.report = std::move(*last);
        out.report.period_estimate.reset();
    }
    out.report.map_evals = evals;
    return out;
}

}  // namespace bbi
