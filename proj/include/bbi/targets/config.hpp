#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bbi/blackbox.hpp"
#include "bbi/targets/ecc.hpp"
#include "bbi/targets/numtheory.hpp"
#include "bbi/targets/spn.hpp"
#include "bbi/targets/stream.hpp"

namespace bbi::targets {

/// A target map built from a JSON config.
///
/// Schema (all constants are hex strings, counts are JSON integers):
///   {"family": "identity" | "complement",  "width": n}
///   {"family": "rotation",   "width": n, "shift": k}
///   {"family": "spn-kpa",    "rounds": 4, "sbox": "E4D1...", "pbox": "048C...", "plaintext": "0x5678"}
///   {"family": "stream-kpa", "key_width": 16, "iv_width": 8, "iv": "0xa5", "feedback": "0x1c20001",
///                            "filter": ["0x42", ...], "warmup": 32, "count": 20}
///   {"family": "rsa",        "n": "0xf", "e": "0x3"}
///   {"family": "rsa-cca",    "n": "0x...", "e": "0x...", "c": "0x..."}
///   {"family": "dlp",        "p": "0xb", "a": "0x2"}
///   {"family": "ecdlp",      "q": "0x11", "a": "0x2", "b": "0x2", "px": "0x5", "py": "0x1"}
/// sbox/pbox list the 16 table entries as hex digits, entry 0 first.
/// Every config may carry a "label"; it replaces the generated map label.
struct Target {
    std::string family;
    BlackBoxMap map;
    nlohmann::ordered_json config;

    // Family-specific parameters, kept for demos and oracles.
    std::optional<ToySpnSpec> spn;
    std::optional<ToyStreamSpec> stream;
    std::optional<RsaParams> rsa;
    std::optional<DlpParams> dlp;
    std::optional<CurveParams> curve;
};

Target load_target(const nlohmann::ordered_json& cfg);
Target load_target_file(const std::string& path);

std::vector<std::string> builtin_target_names();
/// The shipped config of a built-in target; nullopt for unknown names.
std::optional<nlohmann::ordered_json> builtin_target_config(const std::string& name);
/// Built-in name, otherwise a path to a JSON config file.
Target resolve_target(const std::string& name_or_path);

std::uint64_t parse_hex_u64(const std::string& text);

}  // namespace bbi::targets
