#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "bbi/cli/app.hpp"
#include "bbi/cli/demo.hpp"
#include "bbi/cli/survey.hpp"
#include "bbi/oracle.hpp"
#include "bbi/targets/config.hpp"

using namespace bbi;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run bbi_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / ("bbi_test_" + name);
    std::ofstream(p) << text;
    return p;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

// Keeps BBI_SEED out of the way of tests that pass --seed.
struct SeedEnv {
    explicit SeedEnv(const char* v) {
        if (v)
            setenv("BBI_SEED", v, 1);
        else
            unsetenv("BBI_SEED");
    }
    ~SeedEnv() { unsetenv("BBI_SEED"); }
};

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("invert rsa-demo") {
    const Run r = bbi_run({"invert", "--target", "rsa-demo", "--y", "0x8"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["solution"] == "0x2");
    CHECK(j["outcome"] == "Solution");
    CHECK(j["linear_complexity"] == 2);
    CHECK(r.out == read_file(std::filesystem::path(BBI_GOLDEN_DIR) / "invert_rsa_demo.json"));
}

TEST_CASE("invert identity16") {
    const Run r = bbi_run({"invert", "--target", "identity16", "--y", "0xBEEF"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["solution"] == "0xbeef");
    CHECK(j["linear_complexity"] == 1);
    CHECK(j["map_evals"] == 64);
}

TEST_CASE("invert with a truncated window exits 2") {
    const auto cfg = write_temp("rot8.json", R"({"family": "rotation", "width": 8, "shift": 1})");
    Run r = bbi_run({"invert", "--target", cfg.string(), "--y", "0x1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["linear_complexity"] == 8);
    r = bbi_run({"invert", "--target", cfg.string(), "--y", "0x1", "-M", "2"});
    CHECK(r.code == 2);
    const json j = json::parse(r.out);
    CHECK(j["outcome"] == "InsufficientData");
    CHECK(j["solution"].is_null());
}

TEST_CASE("invert an embedding") {
    const Run r = bbi_run({"invert", "-t", "ecdlp-demo", "-y", "0x25", "-M", "40"});  // P = (5, 1)
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["window"].is_number());
    CHECK(j["solution"].is_string());
    CHECK(j.contains("windows_tried"));
}

TEST_CASE("usage and config errors exit 1") {
    CHECK(bbi_run({}).code == 1);
    CHECK(bbi_run({"frobnicate"}).code == 1);
    CHECK(bbi_run({"invert", "--target", "rsa-demo"}).code == 1);
    CHECK(bbi_run({"invert", "--target", "rsa-demo", "--y", "0xZZ"}).code == 1);
    CHECK(bbi_run({"invert", "--target", "rsa-demo", "--y", "0x1f"}).code == 1);
    CHECK(bbi_run({"invert", "--target", "no-such-target", "--y", "0x1"}).code == 1);
    const auto bad = write_temp("bad.json", "{ not json");
    const Run r = bbi_run({"invert", "--target", bad.string(), "--y", "0x1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("malformed") != std::string::npos);
    CHECK(bbi_run({"demo", "nope"}).code == 1);
    CHECK(bbi_run({"--help"}).code == 0);
}

TEST_CASE("eval budget aborts with exit 1") {
    const Run r = bbi_run({"invert", "--target", "identity16", "--y", "0x1", "--max-evals", "10"});
    CHECK(r.code == 1);
    CHECK(r.err.find("budget") != std::string::npos);
}

TEST_CASE("survey of an identity map is all LC 1") {
    const auto cfg = write_temp("id8.json", R"({"family": "identity", "width": 8})");
    const auto summary = std::filesystem::temp_directory_path() / "bbi_test_id8_summary.json";
    const Run r = bbi_run({"survey", "-t", cfg.string(), "--exhaustive", "--summary", summary.string()});
    CHECK(r.code == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 257);
    CHECK(rows[0] == std::vector<std::string>{"seed", "periodic", "LC", "period", "inverted", "evals"});
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][0] == BitVec::from_uint(i - 1, 8).to_hex());
        CHECK(rows[i][2] == "1");
        CHECK(rows[i][4] == "true");
    }
    const json s = json::parse(read_file(summary));
    CHECK(s["lc_histogram"]["1"] == 256);
    CHECK(s["fraction_lc_at_most_threshold"] == 1.0);
    CHECK(s["mean_lc"] == 1.0);
}

TEST_CASE("survey is deterministic and order independent") {
    SeedEnv env(nullptr);
    const Run a = bbi_run({"survey", "-t", "spn-kpa", "-n", "200", "--seed", "5"});
    const Run b = bbi_run({"survey", "-t", "spn-kpa", "-n", "200", "--seed", "5", "-j", "4"});
    const Run c = bbi_run({"survey", "-t", "spn-kpa", "-n", "200", "--seed", "6"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
    {
        SeedEnv five("5");
        CHECK(bbi_run({"survey", "-t", "spn-kpa", "-n", "200", "--seed", "6"}).out == a.out);
    }
    const auto rows = parse_csv(a.out);
    CHECK(rows.size() == 201);
    std::set<std::string> seeds;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        seeds.insert(rows[i][0]);
        if (rows[i][4] == "true") {
            CHECK(rows[i][1] == "true");
            CHECK(std::stoul(rows[i][2]) <= 32);
        }
        // exact counts: M - 1 generations plus the verification when there is a candidate
        CHECK((rows[i][5] == "63" || rows[i][5] == "64"));
    }
    CHECK(seeds.size() == 200);
}

TEST_CASE("survey csv file and summary on stdout") {
    const auto csv = std::filesystem::temp_directory_path() / "bbi_test_dlp.csv";
    const Run r = bbi_run({"survey", "-t", "dlp-demo", "--exhaustive", "-o", csv.string()});
    CHECK(r.code == 0);
    const json s = json::parse(r.out);
    CHECK(s["points"] == 16);
    CHECK(read_file(csv).rfind("seed,periodic,LC,period,inverted,evals\n", 0) == 0);
}

TEST_CASE("golden surveys agree with the oracles") {
    SeedEnv env("0");
    const std::filesystem::path dir(BBI_GOLDEN_DIR);

    const Run id = bbi_run({"survey", "-t", "identity16", "-n", "256"});
    CHECK(id.out == read_file(dir / "survey_identity16.csv"));
    const auto id_rows = parse_csv(id.out);
    REQUIRE(id_rows.size() == 257);
    for (std::size_t i = 1; i < id_rows.size(); ++i)
        CHECK(std::vector<std::string>(id_rows[i].begin() + 1, id_rows[i].end()) ==
              std::vector<std::string>{"true", "1", "1", "true", "64"});

    const Run dlp = bbi_run({"survey", "-t", "dlp-demo", "--exhaustive"});
    CHECK(dlp.out == read_file(dir / "survey_dlp11.csv"));
    const targets::Target t = targets::resolve_target("dlp-demo");
    const auto graph = oracle::functional_graph(t.map);
    const auto rows = parse_csv(dlp.out);
    REQUIRE(rows.size() == 17);
    for (std::size_t v = 0; v < 16; ++v) {
        const auto& row = rows[v + 1];
        const BitVec y = BitVec::from_uint(v, 4);
        const bool periodic = graph.preperiod[v] == 0;
        CHECK(row[1] == (periodic ? "true" : "false"));
        CHECK(row[4] == (periodic ? "true" : "false"));
        if (periodic) {
            CHECK(row[3] == std::to_string(graph.period[v]));
            CHECK(row[2] == std::to_string(oracle::full_period_minpoly(t.map, y).degree()));
        }
    }
    CHECK(rows[10] == std::vector<std::string>{"0x9", "true", "2", "2", "true", "16"});
}

TEST_CASE("demos verify") {
    for (const auto& name : cli::demo_names()) {
        const Run r = bbi_run({"demo", name});
        CHECK_MESSAGE(r.code == 0, name);
        CHECK(r.out.find("demo " + name + ": verified") != std::string::npos);
    }
    const Run dlp = bbi_run({"demo", "dlp"});
    CHECK(dlp.out.find("x = 6\n") != std::string::npos);
    const Run ec = bbi_run({"demo", "ecdlp"});
    CHECK(ec.out.find("winning window: ") != std::string::npos);
    CHECK(ec.out.find("multiplier k = 7\n") != std::string::npos);
    const Run cca = bbi_run({"demo", "rsa-cca"});
    std::size_t checks = 0;
    for (std::size_t pos = 0; (pos = cca.out.find("(t^x)^e mod n for t = ", pos)) != std::string::npos; ++pos) ++checks;
    CHECK(checks == 20);
    CHECK(cca.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("oracle subcommand") {
    Run r = bbi_run({"oracle", "preimages", "-t", "rsa-cca-demo", "-y", "0x1"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["preimages"].size() > 0);
    r = bbi_run({"oracle", "orbit", "-t", "rsa-demo", "-y", "0x8"});
    CHECK(json::parse(r.out)["period"] == 2);
    r = bbi_run({"oracle", "minpoly", "-t", "rot3", "-y", "0x3"});
    CHECK(json::parse(r.out)["minpoly"] == "X^2+X+1");
    r = bbi_run({"oracle", "minpoly", "-t", "dlp-demo", "-y", "0x0"});
    CHECK(r.code == 1);
    CHECK(bbi_run({"oracle", "what", "-t", "rot3", "-y", "0x3"}).code == 1);
}

}
