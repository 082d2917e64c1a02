#include <doctest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "ewci/semigroup.hpp"
#include "ewci/wci.hpp"

using namespace ewci;

TEST_CASE("instances need n >= 3 and positive degrees")
{
    CHECK_THROWS_AS(WCIInstance({4, 6, 10}, 60, 30), Error);
    CHECK_THROWS_AS(WCIInstance({4, 6, 10, 15}, 0, 30), Error);
    CHECK_THROWS_AS(WCIInstance({4, 6, 10, 15}, 60, -1), Error);
    CHECK_FALSE(WCIInstance({4, 6, 10, 15}, 60, 30).linear_cone());
    CHECK(WCIInstance({2, 3, 4, 5}, 5, 6).linear_cone());
}

TEST_CASE("witness for (4,6,10,15), d = (60,30), h = 58")
{
    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    CHECK(canonical_degree(inst) == 55);
    CHECK(cartier_conditions(inst, 58));

    const WitnessOutcome out = solve_section(inst, 58);
    CHECK(out.path == WitnessPath::Certificate);
    CHECK(to_string(out.witness) == "x0*x1^9");
    CHECK(out.witness.degree == 58);
    CHECK(witness_degree(out.witness, inst.weights()) == 58);

    REQUIRE(out.split);
    CHECK(out.split->order == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(out.split->s == 3);
    REQUIRE(out.profile);
    CHECK(out.profile->f1 == 60);
    CHECK(out.profile->f2 == 15);
    CHECK(out.profile->h2 == 15);
    REQUIRE(out.certificate);
    CHECK(out.certificate->kind == CertificateKind::Couple);
    CHECK(out.certificate->indices == std::vector<std::size_t>{0, 1});
    CHECK(out.certificate->lhs == 40);

    CHECK(find_section_witness(inst, 58) == out.witness);
}

TEST_CASE("a weight dividing h gives a single-variable witness")
{
    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    const auto out = solve_section(inst, 60);
    CHECK(out.path == WitnessPath::SingleVariable);
    CHECK(to_string(out.witness) == "x0^15");
    CHECK_FALSE(out.split.has_value());
}

TEST_CASE("choose_split follows the divisibility rule")
{
    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    const SplitChoice split = choose_split(inst, 58);
    CHECK(split.order == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(split.s == 3);

    const WCIInstance shuffled({10, 15, 4, 6}, 60, 30);
    const SplitChoice other = choose_split(shuffled, 58);
    CHECK(other.order == std::vector<std::size_t>{2, 3, 0, 1});
    CHECK(other.s == 3);
    CHECK(reorder(shuffled.weights(), other) == WeightSequence{4, 6, 10, 15});

    const WCIInstance swapped({4, 6, 10, 15}, 30, 60);
    const SplitChoice third = choose_split(swapped, 58);
    CHECK(third.order == std::vector<std::size_t>{1, 2, 3, 0});
    CHECK(third.s == 2);
}

TEST_CASE("choose_split reports the offending index")
{
    const WCIInstance inst({4, 6, 10, 15}, 7, 11);
    try {
        (void)choose_split(inst, 1);
        FAIL("expected SplitImpossible");
    } catch (const SplitImpossible& e) {
        CHECK(e.kind() == ErrorKind::SplitImpossible);
        CHECK(e.index() == 0);
    }
}

TEST_CASE("all_splits lists the greedy split first")
{
    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    const auto splits = all_splits(inst, 58);
    // 6, 10 and 15 divide both degrees.
    CHECK(splits.size() == 8);
    CHECK(splits.front() == choose_split(inst, 58));
    for (const auto& split : splits) {
        CHECK(split.order.size() == 4);
        CHECK(split.s >= 0);
    }
}

TEST_CASE("validate_instance names every check")
{
    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    const auto ok = validate_instance(inst, 58);
    CHECK(ok.all_pass());
    std::vector<std::string> names;
    for (const auto& c : ok.checks) names.push_back(c.name);
    CHECK(names == std::vector<std::string>{"positive_h", "degree_split", "cartier_triples",
                                            "cartier_pairs", "amplitude", "not_linear_cone",
                                            "ambient_gcd"});

    const auto low = validate_instance(inst, 55);
    CHECK_FALSE(low.all_pass());
    REQUIRE(low.find("amplitude"));
    CHECK_FALSE(low.find("amplitude")->passed);

    const auto bad = validate_instance(WCIInstance({4, 6, 10, 15}, 60, 31), 58);
    REQUIRE(bad.find("cartier_pairs"));
    CHECK(bad.find("cartier_pairs")->failures == std::vector<std::vector<std::size_t>>{{1, 3}, {2, 3}});

    const auto zero = validate_instance(inst, 0);
    CHECK_FALSE(zero.all_pass());
    CHECK(zero.checks.size() == 1);

    try {
        (void)solve_section(inst, 55);
        FAIL("expected PreconditionViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::PreconditionViolated);
    }
}

TEST_CASE("linear cones are reported, not enforced")
{
    const WCIInstance inst({2, 3, 4, 5}, 5, 6);
    const auto report = validate_instance(inst, 7);
    REQUIRE(report.find("not_linear_cone"));
    CHECK_FALSE(report.find("not_linear_cone")->passed);
    CHECK_FALSE(report.find("not_linear_cone")->enforced);
    CHECK(report.linear_cone);
}

TEST_CASE("witnesses have degree h on a small domain")
{
    std::size_t solved = 0;
    std::size_t via_certificate = 0;
    for (std::int64_t x = 1; x <= 5; ++x) {
        for (std::int64_t y = x; y <= 5; ++y) {
            for (std::int64_t z = y; z <= 5; ++z) {
                for (std::int64_t w = z; w <= 5; ++w) {
                    const WeightSequence a{x, y, z, w};
                    const std::int64_t period = static_cast<std::int64_t>(lcm_list({x, y, z, w}));
                    for (std::int64_t d1 = 1; d1 <= 12; ++d1) {
                        for (std::int64_t d2 = 1; d2 <= 12; ++d2) {
                            const WCIInstance inst(a, d1, d2);
                            const std::int64_t base = std::max<std::int64_t>(0, d1 + d2 - a.sum());
                            for (std::int64_t h = base + 1; h <= base + period; ++h) {
                                if (!validate_instance(inst, h).all_pass()) continue;
                                const auto out = solve_section(inst, h);
                                REQUIRE(witness_degree(out.witness, a) == h);
                                REQUIRE(out.witness.terms.size() <= 3);
                                for (const auto& [index, exponent] : out.witness.terms) {
                                    REQUIRE(exponent > 0);
                                }
                                REQUIRE(out.path != WitnessPath::ExhaustiveFallback);
                                if (out.path == WitnessPath::Certificate) ++via_certificate;
                                ++solved;
                            }
                        }
                    }
                }
            }
        }
    }
    CHECK(solved > 0);
    CHECK(via_certificate > 0);
}

TEST_CASE("canonical degree and Cartier examples")
{
    CHECK(canonical_degree(WCIInstance({1, 1, 1, 1, 1}, 2, 3)) == 0);
    CHECK(canonical_degree(WCIInstance({1, 1, 1, 1}, 2, 2)) == 0);

    const WCIInstance inst({4, 6, 10, 15}, 60, 30);
    CHECK_FALSE(cartier_conditions(inst, 57));
    const auto report = validate_instance(inst, 57);
    REQUIRE(report.find("cartier_triples"));
    CHECK(report.find("cartier_triples")->failures == std::vector<std::vector<std::size_t>>{{0, 1, 2}});

    const auto even = validate_instance(WCIInstance({2, 4, 6, 8}, 8, 24), 3);
    CHECK_FALSE(even.find("cartier_triples")->passed);

    for (std::int64_t h = 1; h <= 10; ++h) CHECK(cartier_conditions(WCIInstance({1, 1, 1, 1}, 3, 5), h));
}

TEST_CASE("all-one weights")
{
    const WCIInstance inst({1, 1, 1, 1, 1}, 2, 3);
    const SplitChoice split = choose_split(WCIInstance({1, 1, 1, 1}, 2, 3), 1);
    CHECK(split.s == 3);
    CHECK(split.order == std::vector<std::size_t>{0, 1, 2, 3});

    const auto out = solve_section(inst, 1);
    CHECK(out.path == WitnessPath::SingleVariable);
    CHECK(out.witness.terms == std::map<std::size_t, std::int64_t>{{0, 1}});
}

TEST_CASE("a weight dividing h still needs the amplitude inequality")
{
    // 10 is below d1 + d2 - sum(a) = 387, so validation rejects the instance
    // before the single-variable shortcut is reached.
    const WCIInstance inst({2, 3, 5, 7, 11}, 30, 385);
    CHECK_FALSE(validate_instance(inst, 10).find("amplitude")->passed);
    CHECK_THROWS_AS((void)solve_section(inst, 10), Error);

    const auto out = solve_section(inst, 390);
    CHECK(out.path == WitnessPath::SingleVariable);
    CHECK(out.witness.terms == std::map<std::size_t, std::int64_t>{{0, 195}});
}
