#include <algorithm>
#include <stdexcept>

#include "bbi/seqengine.hpp"

namespace bbi {

std::size_t default_window(const BlackBoxMap& f) { return 4 * f.in_width(); }

RecurrenceSequence generate(const BlackBoxMap& f, const BitVec& y, std::size_t m) {
    if (!f.is_regular()) throw std::invalid_argument("generate: map '" + f.label() + "' is not regular (in != out width)");
    if (y.width() != f.in_width()) throw std::invalid_argument("generate: seed width does not match the map");
    if (m < 2) throw std::invalid_argument("generate: need M >= 2");
    RecurrenceSequence seq{{}, y, f.label()};
    seq.terms.reserve(m);
    seq.terms.push_back(y);
    for (std::size_t k = 1; k < m; ++k) seq.terms.push_back(f(seq.terms.back()));
    return seq;
}

BitVec invert_from_minpoly(const RecurrenceSequence& seq, const Gf2Poly& mp) {
    const int deg = mp.degree();
    if (deg < 1) throw std::invalid_argument("invert_from_minpoly: minpoly must have degree >= 1");
    if (!mp.coeff(0))
        throw std::domain_error("invert_from_minpoly: alpha_0 = 0, seed is not on a purely periodic orbit of the data");
    const auto m = static_cast<std::size_t>(deg);
    if (seq.size() < m) throw std::invalid_argument("invert_from_minpoly: fewer terms than the minpoly degree");
    BitVec x = seq.terms[m - 1];
    for (std::size_t i = 1; i < m; ++i)
        if (mp.coeff(i)) x ^= seq.terms[i - 1];
    return x;
}

InversionReport local_inversion(const BlackBoxMap& f, const BitVec& y, std::size_t m, const InversionOptions& opts) {
    InversionReport report;
    const RecurrenceSequence seq = generate(f, y, m);
    report.terms_consumed = seq.size();
    report.map_evals = m - 1;

    MinPolyResult mp = minimal_polynomial(seq);
    report.status = mp.status;
    if (mp.status != MinPolyStatus::Unique) return report;

    const Gf2Poly& poly = *mp.minpoly;
    report.minpoly = poly;
    report.linear_complexity = static_cast<std::size_t>(poly.degree());
    if (!poly.coeff(0)) return report;

    BitVec x = invert_from_minpoly(seq, poly);
    ++report.map_evals;
    if (f(x) != y) return report;

    const auto deg = static_cast<unsigned>(poly.degree());
    const std::uint64_t bound = deg >= 63 ? opts.order_bound_cap : std::min(opts.order_bound_cap, std::uint64_t{1} << deg);
    report.period_estimate = poly_order(poly, bound);
    report.solution = std::move(x);
    return report;
}

Gf2Poly berlekamp_massey(const std::vector<bool>& bits) {
    const std::size_t n = bits.size();
    std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0), t;
    c[0] = b[0] = 1;
    std::size_t len = 0;
    std::size_t shift = 1;
    for (std::size_t i = 0; i < n; ++i) {
        std::uint8_t d = bits[i] ? 1 : 0;
        for (std::size_t j = 1; j <= len; ++j) d ^= static_cast<std::uint8_t>(c[j] & (bits[i - j] ? 1 : 0));
        if (d == 0) {
            ++shift;
            continue;
        }
        t = c;
        for (std::size_t j = 0; j + shift <= n; ++j) c[j + shift] ^= b[j];
        if (2 * len <= i) {
            len = i + 1 - len;
            b = t;
            shift = 1;
        } else {
            ++shift;
        }
    }
    // Connection polynomial C(x) = 1 + c_1 x + ... + c_L x^L -> X^L C(1/X).
    Gf2Poly p;
    for (std::size_t j = 0; j <= len; ++j)
        if (c[j]) p.set_coeff(len - j, true);
    return p;
}

Gf2Poly bm_crosscheck(const RecurrenceSequence& seq) {
    if (seq.size() < 2) throw std::invalid_argument("bm_crosscheck: need at least 2 terms");
    Gf2Poly acc = Gf2Poly::one();
    std::vector<bool> bits(seq.size());
    for (std::size_t b = 0; b < seq.width(); ++b) {
        for (std::size_t k = 0; k < seq.size(); ++k) bits[k] = seq.terms[k].get(b);
        const Gf2Poly comp = berlekamp_massey(bits);
        if (comp.degree() > 0) acc = poly_lcm(acc, comp);
    }
    // All components zero: same fixed-point convention as minimal_polynomial.
    if (acc.degree() == 0) return Gf2Poly::from_exponents({1, 0});
    return acc;
}

}  // namespace bbi
