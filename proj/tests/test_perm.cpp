#include <doctest.h>

#include <random>

#include "drn/error.hpp"
#include "drn/perm.hpp"
#include "oracles.hpp"

using namespace drn;

namespace {

Permutation P(std::initializer_list<int> one_based) {
    std::vector<int> v(one_based);
    return Permutation::from_one_based(v);
}

Permutation random_perm(int k, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(k));
    std::iota(v.begin(), v.end(), 0);
    std::shuffle(v.begin(), v.end(), rng);
    return Permutation::from_zero_based(v);
}

}  // namespace

TEST_CASE("compose") {
    CHECK(compose(P({2, 3, 1}), P({3, 1, 2})) == P({1, 2, 3}));
    CHECK(compose(P({1, 2, 3, 4}), P({3, 4, 1, 2})) == P({3, 4, 1, 2}));
    CHECK(compose(P({2, 1, 3}), P({2, 1, 3})) == P({1, 2, 3}));
    CHECK_THROWS_WITH_AS(compose(P({1, 2}), P({1, 2, 3})), "degree mismatch", InputError);
}

TEST_CASE("inverse") {
    CHECK(inverse(P({2, 3, 1})) == P({3, 1, 2}));
    CHECK(inverse(P({1, 2, 3, 4})) == P({1, 2, 3, 4}));
    CHECK(inverse(P({2, 1, 4, 3})) == P({2, 1, 4, 3}));
}

TEST_CASE("is_derangement") {
    CHECK(is_derangement(P({2, 3, 1})));
    CHECK_FALSE(is_derangement(P({1, 2, 3})));
    CHECK_FALSE(is_derangement(P({2, 1, 3})));
}

TEST_CASE("disagree_everywhere") {
    CHECK(disagree_everywhere(P({1, 2, 3, 4}), P({3, 4, 1, 2})));
    CHECK_FALSE(disagree_everywhere(P({1, 2, 3, 4}), P({1, 2, 4, 3})));
    for (int k = 1; k <= 5; ++k) {
        for (const auto& a : enumerate_permutations(k)) CHECK_FALSE(disagree_everywhere(a, a));
    }
}

TEST_CASE("enumerate_derangements") {
    const auto d3 = enumerate_derangements(3);
    REQUIRE(d3.size() == 2);
    CHECK(d3[0] == P({2, 3, 1}));
    CHECK(d3[1] == P({3, 1, 2}));
    CHECK(enumerate_derangements(1).empty());
    CHECK(enumerate_derangements(4).size() == 9);
}

TEST_CASE("derangement count matches the recurrence for k <= 9") {
    for (int k = 1; k <= 9; ++k) {
        CAPTURE(k);
        CHECK(enumerate_derangements(k).size() == oracle::derangement_number(k));
    }
}

TEST_CASE("enumeration is lexicographic and complete") {
    for (int k = 1; k <= 6; ++k) {
        const auto all = enumerate_permutations(k);
        CHECK(all.size() == factorial(k));
        CHECK(std::is_sorted(all.begin(), all.end()));
        CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    }
}

TEST_CASE("rank and unrank") {
    CHECK(rank(P({1, 2, 3})).rank == 0);
    for (int k = 1; k <= 6; ++k) {
        std::vector<int> rev;
        for (int i = k; i >= 1; --i) rev.push_back(i);
        CHECK(unrank({factorial(k) - 1, k}) == Permutation::from_one_based(rev));
    }
    CHECK(rank(unrank({5, 3})).rank == 5);
}

TEST_CASE("rank/unrank round-trip over S_k, k <= 6") {
    for (int k = 1; k <= 6; ++k) {
        const auto all = enumerate_permutations(k);
        for (std::uint64_t r = 0; r < all.size(); ++r) {
            const auto p = unrank({r, k});
            CHECK(p == all[r]);
            CHECK(rank(p).rank == r);
            CHECK(rank(p).degree == k);
        }
    }
    CHECK_THROWS_AS(unrank({6, 3}), InputError);
}

TEST_CASE("derangement status is inverse-invariant") {
    for (int k = 1; k <= 6; ++k) {
        for (const auto& a : enumerate_permutations(k)) CHECK(is_derangement(a) == is_derangement(inverse(a)));
    }
}

TEST_CASE("disagree_everywhere is symmetric") {
    for (int k = 1; k <= 4; ++k) {
        const auto all = enumerate_permutations(k);
        for (const auto& a : all) {
            for (const auto& b : all) CHECK(disagree_everywhere(a, b) == disagree_everywhere(b, a));
        }
    }
}

TEST_CASE("derangements are closed under conjugation (sampled, k <= 6)") {
    std::mt19937_64 rng(0x5eed);
    for (int k = 2; k <= 6; ++k) {
        const auto ds = enumerate_derangements(k);
        for (int trial = 0; trial < 200; ++trial) {
            const auto& d = ds[rng() % ds.size()];
            const auto t = random_perm(k, rng);
            CHECK(is_derangement(compose(inverse(t), compose(d, t))));
        }
    }
}

TEST_CASE("text form") {
    CHECK(to_string(P({3, 4, 1, 2})) == "(3,4,1,2)");
    CHECK(parse_permutation("(3,4,1,2)") == P({3, 4, 1, 2}));
    CHECK(parse_permutation(to_string(P({2, 1}))) == P({2, 1}));
    CHECK_THROWS_AS(parse_permutation("(1,1,2)"), InputError);
    CHECK_THROWS_AS(parse_permutation("1,2"), InputError);
    CHECK_THROWS_AS(Permutation::from_one_based(std::vector<int>{0, 1}), InputError);
}
