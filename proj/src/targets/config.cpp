#include "bbi/targets/config.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include "bbi/intmod.hpp"
#include "bbi/targets/simple.hpp"

namespace bbi::targets {

namespace {

using nlohmann::ordered_json;

// Shipped configs; configs/*.json in the repository mirror these.
const std::map<std::string, const char*>& builtins() {
    static const std::map<std::string, const char*> table{
        {"identity16", R"({"family": "identity", "width": 16})"},
        {"complement4", R"({"family": "complement", "width": 4})"},
        {"rot3", R"({"family": "rotation", "width": 3, "shift": 1})"},
        {"spn-kpa", R"({"family": "spn-kpa", "rounds": 4, "sbox": "E4D12FB83A6C5907",
                        "pbox": "048C159D26AE37BF", "plaintext": "0x5678"})"},
        {"stream-kpa", R"({"family": "stream-kpa", "key_width": 16, "iv_width": 8, "iv": "0xa5",
                           "feedback": "0x1c20001", "filter": ["0x42", "0x80808", "0x100", "0x402000", "0x20000"],
                           "warmup": 32, "count": 20})"},
        {"stream-linear", R"({"family": "stream-kpa", "key_width": 16, "iv_width": 8, "iv": "0xa5",
                              "feedback": "0x1c20001", "filter": ["0x1"], "warmup": 32, "count": 20})"},
        {"rsa-demo", R"({"family": "rsa", "n": "0xf", "e": "0x3"})"},
        {"rsa-cca-demo", R"({"family": "rsa-cca", "n": "0x25e5", "e": "0x5", "c": "0x1ccd"})"},
        {"dlp-demo", R"({"family": "dlp", "p": "0xb", "a": "0x2"})"},
        {"ecdlp-demo", R"({"family": "ecdlp", "q": "0x11", "a": "0x2", "b": "0x2", "px": "0x5", "py": "0x1"})"},
    };
    return table;
}

std::string require_string(const ordered_json& cfg, const char* key) {
    if (!cfg.contains(key)) throw std::invalid_argument(std::string("target config: missing key '") + key + "'");
    if (!cfg[key].is_string()) throw std::invalid_argument(std::string("target config: '") + key + "' must be a hex string");
    return cfg[key].get<std::string>();
}

std::uint64_t require_hex(const ordered_json& cfg, const char* key) { return parse_hex_u64(require_string(cfg, key)); }

unsigned require_uint(const ordered_json& cfg, const char* key, std::optional<unsigned> fallback = std::nullopt) {
    if (!cfg.contains(key)) {
        if (fallback) return *fallback;
        throw std::invalid_argument(std::string("target config: missing key '") + key + "'");
    }
    if (!cfg[key].is_number_unsigned()) throw std::invalid_argument(std::string("target config: '") + key + "' must be a non-negative integer");
    return cfg[key].get<unsigned>();
}

std::array<std::uint8_t, 16> parse_nibble_table(const std::string& text, const char* what) {
    std::string_view s = text;
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.size() != 16) throw std::invalid_argument(std::string("target config: '") + what + "' needs 16 hex digits");
    std::array<std::uint8_t, 16> out{};
    for (std::size_t i = 0; i < 16; ++i) out[i] = static_cast<std::uint8_t>(parse_hex_u64(std::string(1, s[i])));
    return out;
}

BlackBoxMap relabel(const BlackBoxMap& f, const std::string& label) {
    return BlackBoxMap(f.in_width(), f.out_width(), label, [f](const BitVec& x) { return f(x); });
}

}  // namespace

std::uint64_t parse_hex_u64(const std::string& text) {
    std::string_view s = text;
    if (s.starts_with("0x") || s.starts_with("0X")) s.remove_prefix(2);
    if (s.empty() || s.size() > 16) throw std::invalid_argument("malformed hex constant '" + text + "'");
    std::uint64_t v = 0;
    for (char c : s) {
        int d;
        if (c >= '0' && c <= '9')
            d = c - '0';
        else if (c >= 'a' && c <= 'f')
            d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F')
            d = c - 'A' + 10;
        else
            throw std::invalid_argument("malformed hex constant '" + text + "'");
        v = (v << 4) | static_cast<std::uint64_t>(d);
    }
    return v;
}

Target load_target(const ordered_json& cfg) {
    if (!cfg.is_object()) throw std::invalid_argument("target config must be a JSON object");
    const std::string family = require_string(cfg, "family");

    auto make = [&](BlackBoxMap map) { return Target{family, std::move(map), cfg, {}, {}, {}, {}, {}}; };
    std::optional<Target> t;

    if (family == "identity") {
        t = make(identity_map(require_uint(cfg, "width")));
    } else if (family == "complement") {
        t = make(complement_map(require_uint(cfg, "width")));
    } else if (family == "rotation") {
        t = make(rotation_map(require_uint(cfg, "width"), require_uint(cfg, "shift")));
    } else if (family == "spn-kpa") {
        ToySpnSpec spec;
        spec.rounds = require_uint(cfg, "rounds", 4U);
        if (cfg.contains("sbox")) spec.sbox = parse_nibble_table(require_string(cfg, "sbox"), "sbox");
        if (cfg.contains("pbox")) spec.pbox = parse_nibble_table(require_string(cfg, "pbox"), "pbox");
        const std::uint64_t pt = require_hex(cfg, "plaintext");
        if (pt > 0xFFFF) throw std::invalid_argument("target config: plaintext exceeds 16 bits");
        t = make(kpa_map(spec, static_cast<std::uint16_t>(pt)));
        t->spn = spec;
    } else if (family == "stream-kpa") {
        ToyStreamSpec spec;
        spec.key_width = require_uint(cfg, "key_width", 16U);
        spec.iv_width = require_uint(cfg, "iv_width", 8U);
        spec.iv = require_hex(cfg, "iv");
        spec.feedback = Gf2Poly::from_hex(require_string(cfg, "feedback"));
        if (!cfg.contains("filter") || !cfg["filter"].is_array())
            throw std::invalid_argument("target config: 'filter' must be an array of hex masks");
        spec.filter.clear();
        for (const auto& m : cfg["filter"]) {
            if (!m.is_string()) throw std::invalid_argument("target config: filter masks must be hex strings");
            spec.filter.push_back(parse_hex_u64(m.get<std::string>()));
        }
        spec.warmup = require_uint(cfg, "warmup", 32U);
        t = make(stream_kpa_map(spec, require_uint(cfg, "count")));
        t->stream = spec;
    } else if (family == "rsa") {
        RsaParams params(require_hex(cfg, "n"), require_hex(cfg, "e"));
        t = make(rsa_enc_map(params));
        t->rsa = params;
    } else if (family == "rsa-cca") {
        RsaParams params(require_hex(cfg, "n"), require_hex(cfg, "e"));
        t = make(rsa_cca_map(params, IntMod(require_hex(cfg, "c"), params.n())));
        t->rsa = params;
    } else if (family == "dlp") {
        DlpParams params(require_hex(cfg, "p"), require_hex(cfg, "a"));
        t = make(dlp_map(params));
        t->dlp = params;
    } else if (family == "ecdlp") {
        CurveParams c = make_curve_params(require_hex(cfg, "q"), require_hex(cfg, "a"), require_hex(cfg, "b"),
                                          ECPoint::affine(require_hex(cfg, "px"), require_hex(cfg, "py")));
        t = make(ecdlp_map(c));
        t->curve = c;
    } else {
        throw std::invalid_argument("target config: unknown family '" + family + "'");
    }

    if (cfg.contains("label")) {
        if (!cfg["label"].is_string()) throw std::invalid_argument("target config: 'label' must be a string");
        t->map = relabel(t->map, cfg["label"].get<std::string>());
    }
    return std::move(*t);
}

Target load_target_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open target config '" + path + "'");
    ordered_json cfg;
    try {
        cfg = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed target config '" + path + "': " + e.what());
    }
    return load_target(cfg);
}

std::vector<std::string> builtin_target_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : builtins()) out.push_back(name);
    return out;
}

std::optional<ordered_json> builtin_target_config(const std::string& name) {
    const auto it = builtins().find(name);
    if (it == builtins().end()) return std::nullopt;
    ordered_json cfg = ordered_json::parse(it->second);
    if (!cfg.contains("label")) cfg["label"] = name;
    return cfg;
}

Target resolve_target(const std::string& name_or_path) {
    if (auto cfg = builtin_target_config(name_or_path)) return load_target(*cfg);
    return load_target_file(name_or_path);
}

}  // namespace bbi::targets
