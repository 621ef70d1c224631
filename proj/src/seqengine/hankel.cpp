#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bbi/seqengine.hpp"

namespace bbi {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Incremental column echelon form of the stacked Hankel matrix H(k).
//
// Block row i of column j holds term s_{i+j}; each block is padded to whole
// words so a block starts on a word boundary. A reduced column is stored with
// the set of original columns (`combo`) whose sum it is, which lets it be
// extended by one block row when k grows without redoing the elimination.
// Basis columns keep every bit above their pivot at zero, so appending rows
// below never disturbs the echelon form.
class HankelEchelon {
public:
    explicit HankelEchelon(const RecurrenceSequence& seq)
        : seq_(seq),
          block_words_((seq.width() + 63) / 64),
          combo_words_((seq.size() / 2 + 1 + 63) / 64),
          owner_(seq.size() / 2 * block_words_ * 64 + 64, -1) {}

    std::size_t rank() const noexcept { return rank_; }
    std::size_t order() const noexcept { return k_; }

    // H(1) = [s_0]
    void start() {
        k_ = 1;
        Column c = blank_column();
        append_term(c.bits, 0);
        set_combo(c.combo, 0);
        insert(std::move(c));
    }

    // H(k) -> H(k+1)
    void grow() {
        const std::size_t k = k_;
        for (auto& c : cols_) {
            const std::size_t off = c.bits.size();
            c.bits.resize(off + block_words_, 0);
            for_each_combo(c.combo, [&](std::size_t j) { xor_term(c.bits, off, j + k); });
        }
        ++k_;
        // Former kernel columns are zero above the new block; re-reduce them there.
        for (std::size_t idx = 0; idx < cols_.size(); ++idx)
            if (!cols_[idx].basis) reinsert(idx);
        Column c = blank_column();
        for (std::size_t i = 0; i <= k; ++i) append_term(c.bits, k + i);
        set_combo(c.combo, k);
        insert(std::move(c));
    }

    // Solve H(k) alpha = h(k+1); returns alpha as a combo mask when the
    // right-hand side lies in the column span.
    std::optional<std::vector<std::uint64_t>> solve() const {
        std::vector<std::uint64_t> bits;
        bits.reserve(k_ * block_words_);
        for (std::size_t i = 0; i < k_; ++i) append_term(bits, k_ + i);
        std::vector<std::uint64_t> combo(combo_words_, 0);
        if (reduce(bits, combo) != kNone) return std::nullopt;
        return combo;
    }

    template <class Fn>
    static void for_each_combo(const std::vector<std::uint64_t>& combo, Fn&& fn) {
        for (std::size_t w = 0; w < combo.size(); ++w) {
            std::uint64_t bits = combo[w];
            while (bits != 0) {
                fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

private:
    struct Column {
        std::vector<std::uint64_t> bits;
        std::vector<std::uint64_t> combo;
        bool basis = false;
    };

    Column blank_column() const {
        Column c;
        c.bits.reserve((seq_.size() / 2 + 1) * block_words_);
        c.combo.assign(combo_words_, 0);
        return c;
    }

    static void set_combo(std::vector<std::uint64_t>& combo, std::size_t j) { combo[j / 64] |= std::uint64_t{1} << (j % 64); }

    void append_term(std::vector<std::uint64_t>& bits, std::size_t t) const {
        const auto w = seq_.terms[t].words();
        bits.insert(bits.end(), w.begin(), w.end());
    }

    void xor_term(std::vector<std::uint64_t>& bits, std::size_t off, std::size_t t) const {
        const auto w = seq_.terms[t].words();
        for (std::size_t i = 0; i < block_words_; ++i) bits[off + i] ^= w[i];
    }

    static std::size_t first_set(const std::vector<std::uint64_t>& bits, std::size_t from) {
        std::size_t w = from / 64;
        if (w >= bits.size()) return kNone;
        std::uint64_t cur = bits[w] & (~std::uint64_t{0} << (from % 64));
        while (true) {
            if (cur != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(cur));
            if (++w >= bits.size()) return kNone;
            cur = bits[w];
        }
    }

    // Reduces against the basis; returns the surviving pivot row or kNone.
    std::size_t reduce(std::vector<std::uint64_t>& bits, std::vector<std::uint64_t>& combo) const {
        std::size_t p = first_set(bits, 0);
        while (p != kNone) {
            const int o = owner_[p];
            if (o < 0) return p;
            const auto& b = cols_[static_cast<std::size_t>(o)];
            for (std::size_t i = p / 64; i < bits.size(); ++i) bits[i] ^= b.bits[i];
            for (std::size_t i = 0; i < combo.size(); ++i) combo[i] ^= b.combo[i];
            p = first_set(bits, p + 1);
        }
        return kNone;
    }

    void insert(Column c) {
        cols_.push_back(std::move(c));
        reinsert(cols_.size() - 1);
    }

    void reinsert(std::size_t idx) {
        Column& c = cols_[idx];
        const std::size_t p = reduce(c.bits, c.combo);
        if (p == kNone) return;
        c.basis = true;
        owner_[p] = static_cast<int>(idx);
        ++rank_;
    }

    const RecurrenceSequence& seq_;
    std::size_t block_words_;
    std::size_t combo_words_;
    std::vector<int> owner_;
    std::vector<Column> cols_;
    std::size_t rank_ = 0;
    std::size_t k_ = 0;
};

}  // namespace

const char* to_string(MinPolyStatus s) noexcept {
    switch (s) {
        case MinPolyStatus::Unique:
            return "Unique";
        case MinPolyStatus::RankDeficient:
            return "RankDeficient";
        case MinPolyStatus::Saturated:
            return "Saturated";
    }
    return "?";
}

bool annihilates(const Gf2Poly& p, const RecurrenceSequence& seq) {
    if (p.is_zero()) throw std::invalid_argument("annihilates: zero polynomial");
    const auto d = static_cast<std::size_t>(p.degree());
    const auto exps = p.exponents();
    const std::size_t words = seq.terms.empty() ? 0 : seq.terms[0].word_count();
    std::vector<std::uint64_t> acc(words);
    for (std::size_t j = 0; j + d < seq.size(); ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (auto e : exps) {
            const auto w = seq.terms[j + e].words();
            for (std::size_t i = 0; i < words; ++i) acc[i] ^= w[i];
        }
        for (auto v : acc)
            if (v != 0) return false;
    }
    return true;
}

MinPolyResult minimal_polynomial(const RecurrenceSequence& seq) {
    if (seq.size() < 2) throw std::invalid_argument("minimal_polynomial: need at least 2 terms");
    MinPolyResult result;
    const std::size_t m_max = seq.size() / 2;

    bool all_zero = true;
    for (const auto& t : seq.terms) all_zero = all_zero && t.is_zero();
    if (all_zero) {
        // Zero fixed point: every recurrence holds; report s_{j+1} = s_j.
        result.rank_profile.emplace_back(1, 0);
        result.minpoly = Gf2Poly::from_exponents({1, 0});
        result.status = MinPolyStatus::Unique;
        return result;
    }

    HankelEchelon h(seq);
    h.start();
    for (std::size_t k = 1;; ++k) {
        result.rank_profile.emplace_back(k, h.rank());
        if (h.rank() == k) {
            if (auto alpha = h.solve()) {
                Gf2Poly p = Gf2Poly::monomial(k);
                HankelEchelon::for_each_combo(*alpha, [&](std::size_t j) { p.set_coeff(j, true); });
                if (annihilates(p, seq)) {
                    result.minpoly = std::move(p);
                    result.status = MinPolyStatus::Unique;
                    return result;
                }
            }
        }
        if (k == m_max) break;
        h.grow();
    }
    result.status = h.rank() == m_max ? MinPolyStatus::Saturated : MinPolyStatus::RankDeficient;
    return result;
}

}  // namespace bbi
