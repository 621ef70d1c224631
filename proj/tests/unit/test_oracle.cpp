#include <doctest.h>

#include <random>

#include "bbi/oracle.hpp"
#include "bbi/seqengine.hpp"
#include "bbi/targets/numtheory.hpp"
#include "bbi/targets/simple.hpp"
#include "bbi/targets/spn.hpp"
#include "common/helpers.hpp"

using namespace bbi;

TEST_SUITE("oracle") {

TEST_CASE("brute_force_invert") {
    const BitVec y = BitVec::from_uint(0x5A, 8);
    CHECK(oracle::brute_force_invert(targets::identity_map(8), y) == std::vector<BitVec>{y});

    const BlackBoxMap zero(4, 4, "zero", [](const BitVec&) { return BitVec(4); });
    CHECK(oracle::brute_force_invert(zero, BitVec(4)).size() == 16);
    CHECK(oracle::brute_force_invert(zero, BitVec::from_uint(1, 4)).empty());

    const BlackBoxMap spn = targets::kpa_map(targets::ToySpnSpec{}, 0x5678);
    const BitVec key = BitVec::from_uint(0x1234, 16);
    const auto pre = oracle::brute_force_invert(spn, spn(key));
    CHECK(std::find(pre.begin(), pre.end(), key) != pre.end());

    CHECK_THROWS_AS(oracle::brute_force_invert(targets::identity_map(25), BitVec(25)), std::invalid_argument);
}

TEST_CASE("orbit_profile") {
    auto p = oracle::orbit_profile(targets::identity_map(8), BitVec::from_uint(3, 8));
    CHECK(p.preperiod == 0);
    CHECK(p.period == 1);

    p = oracle::orbit_profile(targets::rsa_enc_map(targets::RsaParams(15, 3)), BitVec::from_uint(8, 4), 1000, true);
    CHECK(p.preperiod == 0);
    CHECK(p.period == 2);
    REQUIRE(p.orbit_terms.has_value());
    CHECK(p.orbit_terms->size() == 2);

    const BlackBoxMap or1 = targets::table_map(2, 2, {1, 1, 3, 3}, "or1");
    p = oracle::orbit_profile(or1, BitVec(2));
    CHECK(p.preperiod == 1);
    CHECK(p.period == 1);
    CHECK_FALSE(p.periodic());

    CHECK_THROWS_AS(oracle::orbit_profile(targets::rotation_map(20, 1), BitVec::from_uint(1, 20), 5), oracle::BudgetExhausted);
}

TEST_CASE("orbit_profile is minimal on random maps") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const BlackBoxMap f = testing::random_function(8, rng);
        const BitVec y = testing::random_point(8, rng);
        const auto p = oracle::orbit_profile(f, y);
        const auto s = generate(f, y, 600).terms;
        for (std::size_t k = p.preperiod; k + p.period < s.size(); ++k) CHECK(s[k] == s[k + p.period]);
        // minimal pre-period and period
        if (p.preperiod > 0) CHECK(s[p.preperiod - 1] != s[p.preperiod - 1 + p.period]);
        for (std::uint64_t d = 1; d < p.period; ++d) CHECK(s[p.preperiod] != s[p.preperiod + d]);
    }
}

TEST_CASE("full_period_minpoly") {
    CHECK(oracle::full_period_minpoly(targets::identity_map(5), BitVec::from_uint(9, 5)) == Gf2Poly::from_exponents({1, 0}));
    CHECK(oracle::full_period_minpoly(targets::rsa_enc_map(targets::RsaParams(15, 3)), BitVec::from_uint(8, 4)) ==
          Gf2Poly::from_exponents({2, 0}));
    const BlackBoxMap or1 = targets::table_map(2, 2, {1, 1, 3, 3}, "or1");
    CHECK_THROWS_AS(oracle::full_period_minpoly(or1, BitVec(2)), std::domain_error);
}

TEST_CASE("full_period_minpoly divides X^N - 1, has order N, and matches the engine") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 30; ++i) {
        const BlackBoxMap f = testing::random_permutation(10, rng);
        const BitVec y = testing::random_point(10, rng);
        const auto p = oracle::orbit_profile(f, y);
        const Gf2Poly mp = oracle::full_period_minpoly(f, y);
        CHECK(poly_mod(Gf2Poly::from_exponents({static_cast<std::size_t>(p.period), 0}), mp).is_zero());
        CHECK(static_cast<std::uint64_t>(mp.degree()) <= p.period);
        CHECK(poly_order(mp, p.period) == p.period);
        if (p.period <= 300) {
            const auto r = minimal_polynomial(generate(f, y, 2 * static_cast<std::size_t>(mp.degree()) + 2));
            REQUIRE(r.status == MinPolyStatus::Unique);
            CHECK(*r.minpoly == mp);
        }
    }
}

TEST_CASE("functional_graph matches orbit_profile") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 5; ++i) {
        const BlackBoxMap f = testing::random_function(10, rng);
        const auto g = oracle::functional_graph(f);
        REQUIRE(g.period.size() == 1024);
        for (std::uint64_t v = 0; v < 1024; v += 7) {
            const auto p = oracle::orbit_profile(f, BitVec::from_uint(v, 10));
            CHECK(g.preperiod[v] == p.preperiod);
            CHECK(g.period[v] == p.period);
        }
    }
}

}
