#include "bbi/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>

#include "bbi/cli/demo.hpp"
#include "bbi/cli/report.hpp"
#include "bbi/cli/survey.hpp"
#include "bbi/embedding.hpp"
#include "bbi/oracle.hpp"
#include "bbi/seqengine.hpp"
#include "bbi/targets/config.hpp"

namespace bbi::cli {

namespace {

using nlohmann::ordered_json;

struct Common {
    std::string target;
    std::uint64_t max_evals = 10'000'000;
};

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    const char* env = std::getenv("BBI_SEED");
    if (env == nullptr || *env == '\0') return flag_seed;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (*end != '\0') throw std::invalid_argument(std::string("BBI_SEED is not an integer: '") + env + "'");
    return v;
}

targets::Target load(const Common& c) {
    targets::Target t = targets::resolve_target(c.target);
    t.map = with_eval_budget(t.map, c.max_evals);
    return t;
}

void add_common(CLI::App* sub, Common& c) {
    std::string names;
    for (const auto& n : targets::builtin_target_names()) names += (names.empty() ? "" : ", ") + n;
    sub->add_option("-t,--target", c.target, "built-in target (" + names + ") or JSON config path")->required();
    sub->add_option("--max-evals", c.max_evals, "abort after this many map evaluations")->capture_default_str();
}

int cmd_invert(const Common& c, const std::string& y_text, std::size_t window, bool scan_all, std::ostream& out) {
    const targets::Target t = load(c);
    const BitVec y = BitVec::parse(y_text, t.map.out_width());
    const std::size_t m = window == 0 ? default_window(t.map) : window;
    ordered_json j;
    bool solved;
    if (t.map.is_regular()) {
        const InversionReport r = local_inversion(t.map, y, m);
        solved = r.solved();
        j = report_json(t.map.label(), y, m, r);
    } else {
        EmbeddingOptions opts;
        opts.scan_all = scan_all;
        const EmbeddingReport r = invert_embedding(t.map, y, m, opts);
        solved = r.report.solved();
        j = report_json(t.map.label(), y, m, r);
    }
    out << j.dump(2) << '\n';
    return solved ? kExitOk : kExitInsufficient;
}

int cmd_survey(const Common& c, SurveyOptions opts, std::optional<std::size_t> threshold, const std::string& csv_path,
               const std::string& summary_path, std::ostream& out) {
    const targets::Target t = load(c);
    opts.seed = effective_seed(opts.seed);
    const std::vector<SurveyRecord> rows = run_survey(t.map, opts);
    const std::size_t m = opts.window == 0 ? default_window(t.map) : opts.window;

    if (csv_path.empty()) {
        write_survey_csv(out, rows);
    } else {
        std::ofstream f(csv_path);
        if (!f) throw std::invalid_argument("cannot write '" + csv_path + "'");
        write_survey_csv(f, rows);
    }
    const ordered_json summary = survey_summary(rows, m, threshold.value_or(t.map.in_width()));
    if (!summary_path.empty()) {
        std::ofstream f(summary_path);
        if (!f) throw std::invalid_argument("cannot write '" + summary_path + "'");
        f << summary.dump(2) << '\n';
    } else if (!csv_path.empty()) {
        out << summary.dump(2) << '\n';
    }
    return kExitOk;
}

int cmd_oracle(const std::string& what, const Common& c, const std::string& y_text, std::ostream& out) {
    const targets::Target t = load(c);
    ordered_json j;
    j["target"] = t.map.label();
    if (what == "preimages") {
        const BitVec y = BitVec::parse(y_text, t.map.out_width());
        j["y"] = y.to_hex();
        ordered_json xs = ordered_json::array();
        for (const auto& x : oracle::brute_force_invert(t.map, y)) xs.push_back(x.to_hex());
        j["preimages"] = std::move(xs);
    } else {
        if (!t.map.is_regular()) throw std::invalid_argument("oracle " + what + " needs a regular map");
        const BitVec y = BitVec::parse(y_text, t.map.out_width());
        j["y"] = y.to_hex();
        const oracle::OrbitProfile p = oracle::orbit_profile(t.map, y);
        j["preperiod"] = p.preperiod;
        j["period"] = p.period;
        if (what == "minpoly") {
            if (!p.periodic()) throw std::domain_error("y is pre-periodic; the full-period minimal polynomial needs a periodic orbit");
            const Gf2Poly mp = oracle::full_period_minpoly(t.map, y);
            j["minpoly"] = mp.to_string();
            j["linear_complexity"] = mp.degree();
        }
    }
    out << j.dump(2) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Black-box local inversion of maps over GF(2)^n by minimal polynomials of recurrence sequences"};
    app.require_subcommand(1);

    Common common;
    std::string y_text;
    std::size_t window = 0;
    bool scan_all = false;

    auto* invert = app.add_subcommand("invert", "solve y = F(x) from the window y, F(y), ..., F^(M-1)(y)");
    add_common(invert, common);
    invert->add_option("-y,--y", y_text, "target value, hex (0x...) or decimal")->required();
    invert->add_option("-M,--window", window, "number of sequence terms (default 4n)");
    invert->add_flag("--scan-all", scan_all, "embeddings: keep scanning windows after the first solution");

    SurveyOptions sopts;
    std::optional<std::size_t> threshold;
    std::string csv_path, summary_path;
    auto* survey = app.add_subcommand("survey", "LC survey over sampled or all points; CSV on stdout");
    add_common(survey, common);
    auto* samples = survey->add_option("-n,--samples", sopts.samples, "number of distinct sampled points")->capture_default_str();
    survey->add_flag("--exhaustive", sopts.exhaustive, "survey the whole domain")->excludes(samples);
    survey->add_option("-M,--window", sopts.window, "number of sequence terms (default 4n)");
    survey->add_option("--seed", sopts.seed, "RNG seed (BBI_SEED overrides)")->capture_default_str();
    survey->add_option("-j,--jobs", sopts.jobs, "worker threads")->capture_default_str();
    survey->add_option("--threshold", threshold, "LC threshold for the summary (default n)");
    survey->add_option("-o,--out", csv_path, "write the CSV here instead of stdout (summary then goes to stdout)");
    survey->add_option("--summary", summary_path, "write the summary JSON here");

    std::string demo_name;
    std::uint64_t demo_seed = 0;
    auto* demo = app.add_subcommand("demo", "run an end-to-end scenario on shipped parameters");
    demo->add_option("name", demo_name, "demo name")->required()->check(CLI::IsMember(demo_names()));
    demo->add_option("--seed", demo_seed, "RNG seed for random test values (BBI_SEED overrides)")->capture_default_str();

    std::string oracle_what;
    auto* orc = app.add_subcommand("oracle", "brute-force ground truth: preimages, orbit (r, N), full-period minpoly");
    orc->add_option("query", oracle_what, "preimages | orbit | minpoly")->required()->check(CLI::IsMember({"preimages", "orbit", "minpoly"}));
    add_common(orc, common);
    orc->add_option("-y,--y", y_text, "point, hex (0x...) or decimal")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*invert) return cmd_invert(common, y_text, window, scan_all, out);
        if (*survey) return cmd_survey(common, sopts, threshold, csv_path, summary_path, out);
        if (*demo) return run_demo(demo_name, out, effective_seed(demo_seed)) ? kExitOk : kExitInsufficient;
        if (*orc) return cmd_oracle(oracle_what, common, y_text, out);
    } catch (const EvalBudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const oracle::BudgetExhausted& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"bbi"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace bbi::cli
