#include <doctest.h>

#include <random>

#include "bbi/oracle.hpp"
#include "bbi/seqengine.hpp"
#include "bbi/targets/numtheory.hpp"
#include "bbi/targets/simple.hpp"
#include "bbi/targets/spn.hpp"
#include "common/helpers.hpp"

using namespace bbi;

namespace {

RecurrenceSequence seq_of(std::initializer_list<std::uint64_t> values, std::size_t width) {
    RecurrenceSequence s{{}, BitVec::from_uint(*values.begin(), width), "literal"};
    for (auto v : values) s.terms.push_back(BitVec::from_uint(v, width));
    return s;
}

Gf2Poly P(std::initializer_list<std::size_t> e) { return Gf2Poly::from_exponents(e); }

const targets::RsaParams kRsa15(15, 3);

}  // namespace

TEST_SUITE("seqengine") {

TEST_CASE("generate") {
    const BitVec y = BitVec::from_uint(0xA, 4);
    const auto id = generate(targets::identity_map(4), y, 4);
    CHECK(id.size() == 4);
    for (const auto& t : id.terms) CHECK(t == y);

    const auto inv = generate(targets::complement_map(4), BitVec(4), 4);
    CHECK(inv.terms[0].to_uint() == 0);
    CHECK(inv.terms[1].to_uint() == 0xF);
    CHECK(inv.terms[2].to_uint() == 0);
    CHECK(inv.terms[3].to_uint() == 0xF);

    const auto rsa = generate(targets::rsa_enc_map(kRsa15), BitVec::from_uint(8, 4), 4);
    CHECK(rsa.terms[0].to_uint() == 8);
    CHECK(rsa.terms[1].to_uint() == 2);
    CHECK(rsa.terms[2].to_uint() == 8);
    CHECK(rsa.terms[3].to_uint() == 2);
    CHECK(rsa.seed == BitVec::from_uint(8, 4));
    CHECK(rsa.map_label == targets::rsa_enc_map(kRsa15).label());
}

TEST_CASE("generate uses exactly M - 1 evaluations") {
    auto counter = std::make_shared<std::atomic<std::uint64_t>>(0);
    const BlackBoxMap f = counted(targets::complement_map(6), counter);
    for (std::size_t m : {2, 3, 17, 100}) {
        counter->store(0);
        generate(f, BitVec(6), m);
        CHECK(counter->load() == m - 1);
    }
}

TEST_CASE("generate rejects bad input") {
    CHECK_THROWS_AS(generate(targets::identity_map(4), BitVec(5), 4), std::invalid_argument);
    CHECK_THROWS_AS(generate(targets::identity_map(4), BitVec(4), 1), std::invalid_argument);
    CHECK_THROWS_AS(generate(targets::duplication_map(4), BitVec(4), 4), std::invalid_argument);
}

TEST_CASE("minimal_polynomial examples") {
    auto r = minimal_polynomial(seq_of({5, 5, 5, 5}, 4));
    CHECK(r.status == MinPolyStatus::Unique);
    CHECK(*r.minpoly == P({1, 0}));

    const auto s82 = seq_of({8, 2, 8, 2}, 4);
    r = minimal_polynomial(s82);
    CHECK(r.status == MinPolyStatus::Unique);
    CHECK(*r.minpoly == P({2, 0}));
    CHECK(annihilates(P({2, 0}), s82));
    CHECK_FALSE(annihilates(P({1, 0}), s82));
    CHECK_FALSE(annihilates(P({1}), s82));
}

TEST_CASE("truncated LC-5 window saturates") {
    const BlackBoxMap f = testing::lfsr_step(5, 0b100101);  // X^5 + X^2 + 1
    const BitVec y = BitVec::from_uint(1, 5);
    const auto full = minimal_polynomial(generate(f, y, 12));
    REQUIRE(full.status == MinPolyStatus::Unique);
    CHECK(*full.minpoly == P({5, 2, 0}));

    const auto cut = minimal_polynomial(generate(f, y, 3));
    CHECK(cut.status == MinPolyStatus::Saturated);
    CHECK_FALSE(cut.minpoly.has_value());
}

TEST_CASE("rank profile is reported and the zero window is X + 1") {
    const auto s = generate(targets::rotation_map(8, 1), BitVec::from_uint(1, 8), 18);
    const auto r = minimal_polynomial(s);
    REQUIRE(r.status == MinPolyStatus::Unique);
    CHECK(*r.minpoly == P({8, 0}));
    REQUIRE(r.rank_profile.size() >= 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(r.rank_profile[i] == std::make_pair(i + 1, i + 1));

    const auto zero = minimal_polynomial(generate(targets::rotation_map(8, 1), BitVec(8), 4));
    CHECK(zero.status == MinPolyStatus::Unique);
    CHECK(*zero.minpoly == P({1, 0}));
    const auto rep = local_inversion(targets::rotation_map(8, 1), BitVec(8), 4);
    REQUIRE(rep.solved());
    CHECK(rep.solution->is_zero());
}

TEST_CASE("invert_from_minpoly examples") {
    const auto s = seq_of({8, 2, 8, 2}, 4);
    CHECK(invert_from_minpoly(s, P({1, 0})) == s.terms[0]);
    CHECK(invert_from_minpoly(s, P({2, 0})).to_uint() == 2);
    CHECK_THROWS_AS(invert_from_minpoly(s, P({2, 1})), std::domain_error);

    const BlackBoxMap rot = targets::rotation_map(3, 1);
    const BitVec y = BitVec::from_bit_string("110");
    const auto seq = generate(rot, y, 8);
    const auto mp = minimal_polynomial(seq);
    REQUIRE(mp.status == MinPolyStatus::Unique);
    const BitVec x = invert_from_minpoly(seq, *mp.minpoly);
    CHECK(x.to_bit_string() == "011");
    CHECK(rot(x) == y);
}

TEST_CASE("local_inversion examples") {
    const BitVec y = BitVec::from_uint(0xBEEF, 16);
    auto r = local_inversion(targets::identity_map(16), y, 4);
    REQUIRE(r.solved());
    CHECK(*r.solution == y);
    CHECK(r.linear_complexity == 1);

    r = local_inversion(targets::rsa_enc_map(kRsa15), BitVec::from_uint(8, 4), 6);
    REQUIRE(r.solved());
    CHECK(r.solution->to_uint() == 2);
    CHECK(r.linear_complexity == 2);
    CHECK(r.period_estimate == 2);
    CHECK(r.terms_consumed == 6);
    CHECK(r.map_evals == 6);
}

TEST_CASE("toy SPN key recovery with M = 2N + 2") {
    const targets::ToySpnSpec spec;
    const BlackBoxMap f = targets::kpa_map(spec, 0x5678);
    std::mt19937_64 rng(101);
    int solved = 0;
    for (int trial = 0; trial < 4000 && solved < 10; ++trial) {
        const BitVec y = f(testing::random_point(16, rng));
        const auto prof = oracle::orbit_profile(f, y);
        if (!prof.periodic() || prof.period > 300) continue;
        const auto r = local_inversion(f, y, 2 * prof.period + 2);
        REQUIRE(r.solved());
        CHECK(f(*r.solution) == y);
        const auto pre = oracle::brute_force_invert(f, y);
        CHECK(std::find(pre.begin(), pre.end(), *r.solution) != pre.end());
        // the orbit preimage is the term just before y's return
        CHECK(*r.solution == generate(f, y, prof.period).terms.back());
        ++solved;
    }
    CHECK(solved == 10);
}

TEST_CASE("Berlekamp-Massey on scalar sequences") {
    CHECK(berlekamp_massey({}) == Gf2Poly::one());
    CHECK(berlekamp_massey({false, false, false}) == Gf2Poly::one());
    CHECK(berlekamp_massey({true, true, true, true}) == P({1, 0}));
    CHECK(berlekamp_massey({true, false, true, false}) == P({2, 0}));
    CHECK(berlekamp_massey({false, false, true}).degree() == 3);  // any degree-3 LFSR fits
    // s_{k+4} = s_{k+1} + s_k, X^4 + X + 1
    std::vector<bool> s{true, false, false, false};
    for (int i = 0; i < 20; ++i) s.push_back(s[s.size() - 3] ^ s[s.size() - 4]);
    CHECK(berlekamp_massey(s) == P({4, 1, 0}));
}

TEST_CASE("bm_crosscheck examples") {
    CHECK(bm_crosscheck(seq_of({2, 2, 2}, 2)) == P({1, 0}));
    CHECK(bm_crosscheck(seq_of({8, 2, 8, 2}, 4)) == P({2, 0}));
    CHECK(bm_crosscheck(seq_of({0, 0, 0}, 3)) == P({1, 0}));
}

TEST_CASE("full period of a random 12-bit permutation: BM equals the oracle") {
    std::mt19937_64 rng(7);
    int checked = 0;
    for (int i = 0; i < 40 && checked < 15; ++i) {
        const BlackBoxMap f = testing::random_permutation(12, rng);
        const BitVec y = testing::random_point(12, rng);
        const auto prof = oracle::orbit_profile(f, y);
        if (prof.period > 4096) continue;
        const auto seq = generate(f, y, 2 * prof.period + 2);
        CHECK(bm_crosscheck(seq) == oracle::full_period_minpoly(f, y));
        ++checked;
    }
    CHECK(checked == 15);
}

TEST_CASE("Hankel agrees with BM, annihilates, and is minimal") {
    std::mt19937_64 rng(2024);
    int unique = 0;
    for (int i = 0; i < 300; ++i) {
        const std::size_t w = 3 + rng() % 5;
        const BlackBoxMap f = (i % 2) ? testing::random_function(w, rng) : testing::random_permutation(w, rng);
        const std::size_t m = 2 + rng() % 30;
        const auto seq = generate(f, testing::random_point(w, rng), m);
        const auto r = minimal_polynomial(seq);
        if (r.status != MinPolyStatus::Unique) continue;
        ++unique;
        CHECK(annihilates(*r.minpoly, seq));
        if (r.minpoly->degree() <= 12) {
            const int d = r.minpoly->degree();
            for (std::uint64_t low = 0; low < (std::uint64_t{1} << (d - 1)); ++low) {
                Gf2Poly p = Gf2Poly::from_mask(low);
                p.set_coeff(static_cast<std::size_t>(d - 1), true);
                CHECK_FALSE(annihilates(p, seq));
            }
        }
        // with at least 2 deg terms the windowed BM polynomial is the same
        if (seq.size() >= 2 * static_cast<std::size_t>(r.minpoly->degree())) CHECK(bm_crosscheck(seq) == *r.minpoly);
    }
    CHECK(unique > 100);
}

TEST_CASE("minpoly properties on certified periodic orbits") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t w = 4 + rng() % 9;
        const BlackBoxMap f = (i % 3 == 0) ? testing::random_function(w, rng) : testing::random_permutation(w, rng);
        const BitVec y = testing::random_point(w, rng);
        const auto prof = oracle::orbit_profile(f, y);
        if (!prof.periodic() || prof.period > 400) continue;
        const auto seq = generate(f, y, 2 * prof.period + 2);
        const auto r = minimal_polynomial(seq);
        REQUIRE(r.status == MinPolyStatus::Unique);
        CHECK(r.minpoly->coeff(0));
        CHECK(poly_order(*r.minpoly) == prof.period);
        const BitVec x = invert_from_minpoly(seq, *r.minpoly);
        CHECK(f(x) == y);
        CHECK(x == seq.terms[prof.period - 1]);
        ++checked;
    }
    CHECK(checked > 60);
}

TEST_CASE("truncated windows never yield a wrong solution") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 300; ++i) {
        const std::size_t w = 4 + rng() % 8;
        const BlackBoxMap f = testing::random_function(w, rng);
        const BitVec y = testing::random_point(w, rng);
        const auto r = local_inversion(f, y, 2 + rng() % 20);
        if (r.solved()) CHECK(f(*r.solution) == y);
        CHECK(r.map_evals <= r.terms_consumed + 1);
    }
}

TEST_CASE("pre-periodic seeds are never inverted to a wrong value") {
    // F(x) = x OR 1 on 2 bits: 0 -> 1 is a tail, 0 has no preimage
    const BlackBoxMap f = targets::table_map(2, 2, {1, 1, 3, 3}, "or1");
    for (std::size_t m = 2; m < 10; ++m) CHECK_FALSE(local_inversion(f, BitVec(2), m).solved());
    const auto r = local_inversion(f, BitVec::from_uint(1, 2), 6);
    REQUIRE(r.solved());
    CHECK(f(*r.solution).to_uint() == 1);
}

TEST_CASE("maps are deterministic") {
    const BlackBoxMap f = targets::kpa_map(targets::ToySpnSpec{}, 0x1111);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        const BitVec x = testing::random_point(16, rng);
        CHECK(f(x) == f(x));
    }
}

TEST_CASE("eval budget") {
    const BlackBoxMap f = with_eval_budget(targets::identity_map(4), 5);
    CHECK_NOTHROW(generate(f, BitVec(4), 6));
    CHECK_THROWS_AS(f(BitVec(4)), EvalBudgetExceeded);
}

}
