#include "bbi/cli/report.hpp"

namespace bbi::cli {

using nlohmann::ordered_json;

ordered_json report_json(const std::string& target, const BitVec& y, std::size_t window, const InversionReport& r) {
    ordered_json j;
    j["target"] = target;
    j["y"] = y.to_hex();
    j["M"] = window;
    j["outcome"] = r.solved() ? "Solution" : "InsufficientData";
    j["solution"] = r.solution ? ordered_json(r.solution->to_hex()) : ordered_json(nullptr);
    j["status"] = to_string(r.status);
    j["minpoly"] = r.minpoly ? ordered_json(r.minpoly->to_string()) : ordered_json(nullptr);
    j["linear_complexity"] = r.linear_complexity ? ordered_json(*r.linear_complexity) : ordered_json(nullptr);
    j["terms_consumed"] = r.terms_consumed;
    j["map_evals"] = r.map_evals;
    j["period_estimate"] = r.period_estimate ? ordered_json(*r.period_estimate) : ordered_json(nullptr);
    return j;
}

ordered_json report_json(const std::string& target, const BitVec& y, std::size_t window, const EmbeddingReport& r) {
    ordered_json j = report_json(target, y, window, r.report);
    j["window"] = r.window ? ordered_json(*r.window) : ordered_json(nullptr);
    j["windows_tried"] = r.windows_tried;
    ordered_json alts = ordered_json::array();
    for (const auto& [index, x] : r.alternatives) alts.push_back({{"window", index}, {"solution", x.to_hex()}});
    j["alternatives"] = std::move(alts);
    return j;
}

}  // namespace bbi::cli
