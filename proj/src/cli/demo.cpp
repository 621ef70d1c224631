#include "bbi/cli/demo.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "bbi/embedding.hpp"
#include "bbi/intmod.hpp"
#include "bbi/seqengine.hpp"
#include "bbi/targets/config.hpp"

namespace bbi::cli {

namespace {

using targets::Target;

constexpr std::uint16_t kSpnDemoKey = 0x370B;
constexpr std::uint64_t kStreamDemoKey = 0x214E;
constexpr std::uint64_t kEcdlpDemoMultiplier = 7;

void print_window(std::ostream& out, const RecurrenceSequence& seq) {
    constexpr std::size_t kShown = 12;
    out << "  window (" << seq.size() << " terms):";
    for (std::size_t i = 0; i < seq.size() && i < kShown; ++i) out << ' ' << seq.terms[i].to_hex();
    if (seq.size() > kShown) out << " ...";
    out << '\n';
}

void print_report(std::ostream& out, const InversionReport& r) {
    out << "  status: " << to_string(r.status) << '\n';
    if (r.minpoly) out << "  minpoly: " << r.minpoly->to_string() << '\n';
    if (r.linear_complexity) out << "  LC: " << *r.linear_complexity << '\n';
    if (r.period_estimate) out << "  period (order of minpoly): " << *r.period_estimate << '\n';
    out << "  map evaluations: " << r.map_evals << '\n';
    out << "  solution: " << (r.solution ? r.solution->to_hex() : std::string("none (insufficient data)")) << '\n';
}

// Regular-map scenario: window, report, returns the verified solution.
std::optional<BitVec> invert_regular(std::ostream& out, const Target& t, const BitVec& y, std::size_t m) {
    out << "target: " << t.map.label() << '\n' << "  y = " << y.to_hex() << ", M = " << m << '\n';
    print_window(out, generate(t.map, y, m));
    const InversionReport r = local_inversion(t.map, y, m);
    print_report(out, r);
    return r.solution;
}

std::optional<BitVec> invert_embedded(std::ostream& out, const Target& t, const BitVec& y, std::size_t m) {
    out << "target: " << t.map.label() << " (" << t.map.in_width() << " -> " << t.map.out_width() << " bits, "
        << window_count(t.map) << " windows)\n"
        << "  y = " << y.to_hex() << ", M = " << m << '\n';
    const EmbeddingReport e = invert_embedding(t.map, y, m);
    out << "  windows tried: " << e.windows_tried.size() << '\n';
    if (e.window) {
        out << "  winning window: " << *e.window << '\n';
        print_window(out, generate(composed_map(t.map, ProjectionWindow{*e.window}), project(y, t.map.in_width(), ProjectionWindow{*e.window}), m));
    }
    print_report(out, e.report);
    return e.report.solution;
}

bool check(std::ostream& out, const std::string& what, bool ok) {
    out << "  check " << what << ": " << (ok ? "ok" : "FAILED") << '\n';
    return ok;
}

bool demo_rsa_decrypt(std::ostream& out, std::uint64_t) {
    const Target t = targets::resolve_target("rsa-demo");
    const auto& rsa = *t.rsa;
    const BitVec y = BitVec::from_uint(8, rsa.bit_length());
    const auto x = invert_regular(out, t, y, default_window(t.map));
    if (!x) return false;
    const std::uint64_t m = x->to_uint();
    out << "  plaintext m = " << m << '\n';
    return check(out, std::to_string(m) + "^" + std::to_string(rsa.e()) + " mod " + std::to_string(rsa.n()) + " = 8",
                 nt::powmod(m, rsa.e(), rsa.n()) == 8);
}

bool demo_rsa_cca(std::ostream& out, std::uint64_t seed) {
    const Target t = targets::resolve_target("rsa-cca-demo");
    const auto& rsa = *t.rsa;
    const std::uint64_t n = rsa.n(), e = rsa.e();
    const std::uint64_t c = targets::parse_hex_u64(t.config["c"].get<std::string>());
    // the chosen-ciphertext oracle decrypts c once
    const std::uint64_t m = nt::powmod(c, rsa.private_exponent(), n);
    out << "chosen ciphertext c = " << c << ", oracle decryption m = " << m << '\n';
    const auto x = invert_regular(out, t, BitVec::from_uint(m, rsa.bit_length()), default_window(t.map));
    if (!x) return false;
    const std::uint64_t k = x->to_uint();
    out << "  recovered exponent x = " << k << '\n';

    std::mt19937_64 rng(seed);
    bool all = true;
    for (int i = 0; i < 20; ++i) {
        std::uint64_t tc;
        do tc = rng() % n;
        while (tc == 0 || nt::gcd(tc, n) != 1);
        const std::uint64_t back = nt::powmod(nt::powmod(tc, k, n), e, n);
        const bool ok = back == tc;
        all = all && ok;
        out << "  (t^x)^e mod n for t = " << tc << ": " << back << (ok ? "  ok" : "  MISMATCH") << '\n';
    }
    return check(out, "key equivalence on 20 ciphertexts", all);
}

bool demo_dlp(std::ostream& out, std::uint64_t) {
    const Target t = targets::resolve_target("dlp-demo");
    const auto& dlp = *t.dlp;
    const std::uint64_t b = 9;
    const auto x = invert_regular(out, t, BitVec::from_uint(b, dlp.bit_length()), default_window(t.map));
    if (!x) return false;
    const std::uint64_t k = targets::dlp_exponent(dlp, x->to_uint());
    out << "  x = " << k << '\n';
    return check(out, std::to_string(dlp.base()) + "^" + std::to_string(k) + " mod " + std::to_string(dlp.p()) + " = 9",
                 nt::powmod(dlp.base(), k, dlp.p()) == b);
}

bool demo_ecdlp(std::ostream& out, std::uint64_t) {
    const Target t = targets::resolve_target("ecdlp-demo");
    const auto& c = *t.curve;
    out << "curve y^2 = x^3 + " << c.curve.a << "x + " << c.curve.b << " over F_" << c.curve.q << ", #E = " << c.group_order
        << ", P = (" << c.base.x << ", " << c.base.y << "), n_P = " << c.base_order << '\n';
    const auto q = targets::ec_scalar_mul(c.curve, kEcdlpDemoMultiplier, c.base);
    out << "Q = [" << kEcdlpDemoMultiplier << "]P = (" << q.x << ", " << q.y << ")\n";
    const auto x = invert_embedded(out, t, targets::encode_point(c, q), 2 * c.base_order + 2);
    if (!x) return false;
    const std::uint64_t k = targets::ecdlp_multiplier(c, x->to_uint());
    out << "  multiplier k = " << k << '\n';
    return check(out, "[k]P = Q", targets::ec_scalar_mul(c.curve, k, c.base) == q);
}

bool demo_spn(std::ostream& out, std::uint64_t) {
    const Target t = targets::resolve_target("spn-kpa");
    const std::uint16_t p0 = static_cast<std::uint16_t>(targets::parse_hex_u64(t.config["plaintext"].get<std::string>()));
    const std::uint16_t cipher = targets::spn_encrypt(*t.spn, kSpnDemoKey, p0);
    out << "known pair: P = " << BitVec::from_uint(p0, 16).to_hex() << ", C = E(K, P) = " << BitVec::from_uint(cipher, 16).to_hex()
        << " (K secret)\n";
    const auto x = invert_regular(out, t, BitVec::from_uint(cipher, 16), default_window(t.map));
    if (!x) return false;
    const auto k = static_cast<std::uint16_t>(x->to_uint());
    out << "  recovered key " << x->to_hex() << (k == kSpnDemoKey ? " (the secret key)" : " (an equivalent key)") << '\n';
    return check(out, "E(x, P) = C", targets::spn_encrypt(*t.spn, k, p0) == cipher);
}

bool demo_stream(std::ostream& out, std::uint64_t) {
    const Target t = targets::resolve_target("stream-kpa");
    const std::size_t count = t.map.out_width();
    const BitVec key = BitVec::from_uint(kStreamDemoKey, t.stream->key_width);
    const BitVec ks = targets::stream_keystream(*t.stream, key, count);
    out << "observed keystream (" << count << " bits): " << ks.to_bit_string() << '\n';
    const auto x = invert_embedded(out, t, ks, default_window(t.map));
    if (!x) return false;
    out << "  recovered key " << x->to_hex() << (*x == key ? " (the secret key)" : " (an equivalent key)") << '\n';
    return check(out, "re-synthesized keystream matches", targets::stream_keystream(*t.stream, *x, count) == ks);
}

const std::map<std::string, std::function<bool(std::ostream&, std::uint64_t)>>& registry() {
    static const std::map<std::string, std::function<bool(std::ostream&, std::uint64_t)>> table{
        {"spn-kpa", demo_spn}, {"stream", demo_stream}, {"rsa-decrypt", demo_rsa_decrypt},
        {"rsa-cca", demo_rsa_cca}, {"dlp", demo_dlp}, {"ecdlp", demo_ecdlp},
    };
    return table;
}

}  // namespace

std::vector<std::string> demo_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

bool run_demo(const std::string& name, std::ostream& out, std::uint64_t seed) {
    const auto it = registry().find(name);
    if (it == registry().end()) throw std::invalid_argument("unknown demo '" + name + "'");
    const bool ok = it->second(out, seed);
    out << "demo " << name << ": " << (ok ? "verified" : "not verified") << '\n';
    return ok;
}

}  // namespace bbi::cli
