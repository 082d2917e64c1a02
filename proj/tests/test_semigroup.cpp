#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "ewci/semigroup.hpp"

using namespace ewci;

namespace {

// Lexicographically smallest exponent vector by plain enumeration.
std::optional<std::vector<std::int64_t>> brute_representation(const std::vector<std::int64_t>& gens,
                                                              std::int64_t h)
{
    std::vector<std::int64_t> ks(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, std::int64_t rest) -> bool {
        if (pos + 1 == gens.size()) {
            if (rest % gens[pos] != 0) return false;
            ks[pos] = rest / gens[pos];
            return true;
        }
        for (std::int64_t k = 0; k * gens[pos] <= rest; ++k) {
            ks[pos] = k;
            if (self(self, pos + 1, rest - k * gens[pos])) return true;
        }
        return false;
    };
    if (rec(rec, 0, h)) return ks;
    return std::nullopt;
}

} // namespace

TEST_CASE("is_representable examples")
{
    CHECK_FALSE(is_representable({2, 3}, 1));
    CHECK(is_representable({4, 6}, 58));
    CHECK_FALSE(is_representable({4, 6, 9}, 11));
    CHECK(is_representable({4, 6, 9}, 13));
    CHECK_THROWS_AS((void)is_representable({2, 3}, 0), Error);
}

TEST_CASE("coin systems take one to three positive generators")
{
    CHECK_THROWS_AS(CoinSystem(std::vector<std::int64_t>{}), Error);
    CHECK_THROWS_AS(CoinSystem({1, 2, 3, 4}), Error);
    CHECK_THROWS_AS(CoinSystem({3, 0}), Error);
}

TEST_CASE("find_representation examples")
{
    const auto r1 = find_representation({4, 6}, 58);
    REQUIRE(r1);
    CHECK(r1->exponents == std::vector<std::int64_t>{1, 9});

    const auto r2 = find_representation({5}, 15);
    REQUIRE(r2);
    CHECK(r2->exponents == std::vector<std::int64_t>{3});

    const auto r3 = find_representation({4, 6, 9}, 13);
    REQUIRE(r3);
    CHECK(r3->exponents == std::vector<std::int64_t>{1, 0, 1});

    CHECK_FALSE(find_representation({4, 6, 9}, 11));
    CHECK_FALSE(find_representation({4, 6}, 7));
    CHECK_FALSE(find_representation({5}, 7));
}

TEST_CASE("find_representation matches enumeration and the DP table")
{
    for (std::int64_t x = 1; x <= 9; ++x) {
        for (std::int64_t y = 1; y <= 9; ++y) {
            for (std::int64_t z = 1; z <= 9; ++z) {
                const std::vector<std::vector<std::int64_t>> systems{{x}, {x, y}, {x, y, z}};
                for (const auto& gens : systems) {
                    const auto table = representable_up_to(gens, 80);
                    for (std::int64_t h = 1; h <= 80; ++h) {
                        const auto rep = find_representation(CoinSystem(gens), h);
                        const auto brute = brute_representation(gens, h);
                        REQUIRE(rep.has_value() == table[static_cast<std::size_t>(h)]);
                        REQUIRE(rep.has_value() == brute.has_value());
                        if (rep) {
                            REQUIRE(rep->exponents == *brute);
                            REQUIRE(rep->value == h);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("sufficiency bounds")
{
    CHECK(frobenius_bound_two(2, 3) == 1);
    CHECK(frobenius_bound_two(4, 6) == 2);
    CHECK(frobenius_bound_two(1, 1) == -1);

    CHECK(frobenius_bound_three(4, 6, 9) == 11);
    CHECK(frobenius_bound_three(1, 1, 1) == -1);
    // lcm(2,3) + lcm(1,5) - 2 - 3 - 5
    CHECK(frobenius_bound_three(2, 3, 5) == 1);
    CHECK_THROWS_AS((void)frobenius_bound_two(0, 3), Error);
}

TEST_CASE("guaranteed_representable examples")
{
    CHECK(guaranteed_representable({4, 6}, 4));
    CHECK_FALSE(guaranteed_representable({4, 6}, 2));
    CHECK(guaranteed_representable({4, 6, 9}, 12));
    CHECK_FALSE(guaranteed_representable({4, 6}, 9));  // gcd 2 does not divide 9
    try {
        (void)guaranteed_representable({7}, 14);
        FAIL("expected WrongArity");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::WrongArity);
    }
}

TEST_CASE("classical Frobenius number of a coprime pair is not representable")
{
    for (std::int64_t x = 2; x <= 20; ++x) {
        for (std::int64_t y = 2; y <= 20; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const std::int64_t f = x * y - x - y;
            if (f < 1) continue;
            CHECK_FALSE(is_representable({x, y}, f));
            CHECK(is_representable({x, y}, f + 1));
        }
    }
}

TEST_CASE("membership is invariant under common scaling")
{
    for (std::int64_t c = 1; c <= 5; ++c) {
        for (std::int64_t x = 1; x <= 12; ++x) {
            for (std::int64_t y = 1; y <= 12; ++y) {
                const auto base = representable_up_to(std::vector<std::int64_t>{x, y}, 60);
                const auto scaled = representable_up_to(std::vector<std::int64_t>{c * x, c * y}, 60 * c);
                for (std::int64_t h = 1; h <= 60; ++h) {
                    REQUIRE(base[static_cast<std::size_t>(h)] == scaled[static_cast<std::size_t>(c * h)]);
                }
            }
        }
    }
}
