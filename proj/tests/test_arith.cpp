#include <doctest.h>

#include <limits>
#include <numeric>
#include <vector>

#include "ewci/arith.hpp"

using namespace ewci;

TEST_CASE("gcd_subset on the reference sequence")
{
    const WeightSequence a{4, 6, 10, 15};
    CHECK(gcd_subset(a, {0, 1}) == 2);
    CHECK(gcd_subset(a, {2}) == 10);
    CHECK(gcd_subset(a, {0, 1, 2, 3}) == 1);
    CHECK(gcd_subset(a, {2, 3}) == 5);
}

TEST_CASE("gcd_subset rejects empty and out-of-range subsets")
{
    const WeightSequence a{4, 6, 10, 15};
    try {
        (void)gcd_subset(a, IndexSubset{});
        FAIL("expected EmptySubset");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::EmptySubset);
    }
    try {
        (void)gcd_subset(a, {1, 4});
        FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::IndexOutOfRange);
    }
    CHECK_THROWS_AS(IndexSubset({1, 1}), Error);
}

TEST_CASE("weight sequences hold positive entries")
{
    CHECK_THROWS_AS(WeightSequence({3, 0, 2}), Error);
    CHECK_THROWS_AS(WeightSequence(std::vector<std::int64_t>{}), Error);
    const WeightSequence a{2, 3, 5, 7};
    CHECK(a.n() == 3);
    CHECK(a.sum() == 17);
    CHECK(a.reversed() == WeightSequence{7, 5, 3, 2});
    CHECK(to_string(a) == "(2,3,5,7)");
}

TEST_CASE("lcm_list examples")
{
    CHECK(lcm_list({4, 6}) == 12);
    CHECK(lcm_list({4, 6, 5}) == 60);
    CHECK(lcm_list({7}) == 7);
    CHECK_THROWS_AS((void)lcm_list(std::span<const Int>{}), Error);
}

TEST_CASE("lcm overflow is detected, not wrapped")
{
    // Product of the first primes quickly leaves 127 bits.
    const std::vector<Int> primes{2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                                  59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107};
    CHECK_THROWS_AS((void)lcm_list(primes), OverflowError);

    const Int big = static_cast<Int>(1) << 100;
    CHECK_THROWS_AS((void)lcm(big, big - 1), OverflowError);
    CHECK(lcm(big, big / 2) == big);
    CHECK_THROWS_AS((void)checked_add(std::numeric_limits<Int>::max(), 1), OverflowError);
    CHECK_THROWS_AS((void)checked_sub(std::numeric_limits<Int>::min(), 1), OverflowError);
}

TEST_CASE("to_string for wide values")
{
    CHECK(to_string(static_cast<Int>(0)) == "0");
    CHECK(to_string(static_cast<Int>(-42)) == "-42");
    const Int big = static_cast<Int>(1) << 100;
    CHECK(to_string(big) == "1267650600228229401496703205376");
    CHECK(to_string(std::numeric_limits<Int>::min()) ==
          "-170141183460469231731687303715884105728");
}

TEST_CASE("gcd_of_lcms examples and both routes")
{
    const std::vector<Int> as1{4, 6}, bs1{10, 15};
    CHECK(gcd_of_lcms(as1, bs1) == 6);
    CHECK(lcm_of_pairwise_gcds(as1, bs1) == 6);

    const std::vector<Int> as2{2}, bs2{3};
    CHECK(gcd_of_lcms(as2, bs2) == 1);

    const std::vector<Int> as3{6, 10}, bs3{15};
    CHECK(gcd_of_lcms(as3, bs3) == 15);
    CHECK(lcm_of_pairwise_gcds(as3, bs3) == 15);
}

TEST_CASE("gcd of subset gcds is the gcd of the union (small exhaustive)")
{
    // All sequences of length 4 over [1, 12], all pairs of nonempty subsets.
    std::vector<std::int64_t> seq(4, 1);
    for (;;) {
        const WeightSequence a(seq);
        for (unsigned i = 1; i < 16; ++i) {
            for (unsigned j = 1; j < 16; ++j) {
                std::vector<std::size_t> in_i, in_j;
                for (std::size_t k = 0; k < 4; ++k) {
                    if (i >> k & 1U) in_i.push_back(k);
                    if (j >> k & 1U) in_j.push_back(k);
                }
                const IndexSubset si(in_i), sj(in_j);
                REQUIRE(gcd(gcd_subset(a, si), gcd_subset(a, sj)) == gcd_subset(a, si.united(sj)));
            }
        }
        std::size_t k = 0;
        while (k < 4 && seq[k] == 12) seq[k++] = 1;
        if (k == 4) break;
        ++seq[k];
    }
}

TEST_CASE("gcd of lcms equals lcm of pairwise gcds (small exhaustive)")
{
    // Ordered lists of length 1..3 over [1, 9] on both sides.
    std::vector<std::vector<Int>> lists;
    for (Int x = 1; x <= 9; ++x) {
        lists.push_back({x});
        for (Int y = 1; y <= 9; ++y) {
            lists.push_back({x, y});
            for (Int z = 1; z <= 9; ++z) lists.push_back({x, y, z});
        }
    }
    std::size_t checked = 0;
    for (const auto& as : lists) {
        for (const auto& bs : lists) {
            REQUIRE(gcd_of_lcms(as, bs) == lcm_of_pairwise_gcds(as, bs));
            ++checked;
        }
    }
    CHECK(checked == lists.size() * lists.size());
}
