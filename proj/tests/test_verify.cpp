#include <doctest.h>

#include <numeric>
#include <stop_token>
#include <vector>

#include "ewci/verify.hpp"

using namespace ewci;

namespace {

nlohmann::json stable(const VerificationReport& report)
{
    nlohmann::json j = to_json(report);
    j.erase("elapsed_ms");
    return j;
}

// Direct count of (a, d1, d2, h) cells passing the enforced hypotheses.
std::uint64_t brute_theorem_cells(int n_min, int n_max, std::int64_t max_weight, std::int64_t max_degree)
{
    std::uint64_t count = 0;
    SweepBounds bounds;
    bounds.n_min = n_min;
    bounds.n_max = n_max;
    bounds.max_weight = max_weight;
    for (const auto& a : enumerate_sequences(bounds)) {
        const std::vector<std::int64_t> w(a.begin(), a.end());
        std::int64_t period = 1;
        for (auto x : w) period = std::lcm(period, x);
        const std::int64_t sum = std::accumulate(w.begin(), w.end(), std::int64_t{0});
        std::vector<std::int64_t> pairs, triples;
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                pairs.push_back(std::gcd(w[i], w[j]));
                for (std::size_t k = j + 1; k < w.size(); ++k) {
                    triples.push_back(std::gcd(std::gcd(w[i], w[j]), w[k]));
                }
            }
        }
        for (std::int64_t d1 = 1; d1 <= max_degree; ++d1) {
            for (std::int64_t d2 = 1; d2 <= max_degree; ++d2) {
                const std::int64_t base = std::max<std::int64_t>(0, d1 + d2 - sum);
                for (std::int64_t h = base + 1; h <= base + period; ++h) {
                    bool ok = true;
                    for (auto g : triples) ok = ok && h % g == 0;
                    for (auto x : w) ok = ok && (h % x == 0 || d1 % x == 0 || d2 % x == 0);
                    for (auto g : pairs) ok = ok && (h % g == 0 || (d1 % g == 0 && d2 % g == 0));
                    if (ok) ++count;
                }
            }
        }
    }
    return count;
}

} // namespace

TEST_CASE("sequence enumeration")
{
    SweepBounds bounds;
    bounds.n_min = 3;
    bounds.n_max = 3;
    bounds.max_weight = 2;
    const auto seqs = enumerate_sequences(bounds);
    REQUIRE(seqs.size() == 5);
    CHECK(seqs.front() == WeightSequence{1, 1, 1, 1});
    CHECK(seqs[1] == WeightSequence{1, 1, 1, 2});
    CHECK(seqs.back() == WeightSequence{2, 2, 2, 2});

    bounds.n_max = 4;
    bounds.max_weight = 3;
    // C(6,4) + C(7,5)
    CHECK(enumerate_sequences(bounds).size() == 15 + 21);

    bounds.max_weight = 0;
    CHECK(enumerate_sequences(bounds).empty());
}

TEST_CASE("proposition sweep on n = 3, weights <= 6")
{
    SweepBounds bounds;
    bounds.max_weight = 6;
    const auto report = verify_proposition(bounds);
    CHECK(report.passed());
    CHECK_FALSE(report.vacuous());
    CHECK(report.instances_checked == 1440);
    CHECK(report.tallies.at("certificate.couple") + report.tallies.at("certificate.triple") == 1440);
    CHECK(report.tallies.at("sequences") == 126);
    CHECK(to_json(report)["verdict"] == "pass");
}

TEST_CASE("a domain with no admissible cell is vacuous")
{
    SweepBounds bounds;
    bounds.max_weight = 1;
    const auto report = verify_proposition(bounds);
    CHECK(report.passed());
    CHECK(report.vacuous());
    CHECK(to_json(report)["verdict"] == "pass-vacuous");
}

TEST_CASE("sweeps reject malformed bounds")
{
    SweepBounds bounds;
    bounds.max_weight = 0;
    CHECK_THROWS_AS((void)verify_proposition(bounds), Error);
    CHECK_THROWS_AS((void)verify_theorem(bounds), Error);

    bounds.max_weight = 4;
    bounds.n_min = 2;
    CHECK_THROWS_AS((void)verify_proposition(bounds), Error);
    CHECK_THROWS_AS((void)verify_theorem(bounds), Error);

    bounds.n_min = 4;
    bounds.n_max = 3;
    CHECK_THROWS_AS((void)verify_proposition(bounds), Error);

    LemmaBounds lemmas;
    lemmas.binary_max = 0;
    CHECK_THROWS_AS((void)verify_lemmas(lemmas), Error);
}

TEST_CASE("theorem sweep counts match a direct enumeration")
{
    const std::uint64_t small = brute_theorem_cells(3, 3, 4, 16);

    SweepBounds bounds;
    bounds.max_weight = 4;
    bounds.max_degree = 16;
    const auto report = verify_theorem(bounds);
    CHECK(report.passed());
    CHECK(report.instances_checked == small);
}

TEST_CASE("theorem sweep counts on reference domains")
{
    SweepBounds bounds;
    bounds.max_weight = 5;
    bounds.max_degree = 30;
    const auto a = verify_theorem(bounds);
    CHECK(a.passed());
    CHECK(a.instances_checked == 173214);
    CHECK(a.failures_for("certificate_path") == 0);

    bounds.n_max = 4;
    bounds.max_weight = 4;
    bounds.max_degree = 24;
    const auto b = verify_theorem(bounds);
    CHECK(b.passed());
    CHECK(b.instances_checked == 94900);
}

TEST_CASE("reports do not depend on the worker count")
{
    SweepBounds bounds;
    bounds.n_max = 4;
    bounds.max_weight = 5;
    SweepOptions one;
    SweepOptions three;
    three.jobs = 3;
    CHECK(stable(verify_proposition(bounds, one)) == stable(verify_proposition(bounds, three)));
    CHECK(stable(verify_proposition(bounds, one)).dump() == stable(verify_proposition(bounds, one)).dump());

    bounds.n_max = 3;
    bounds.max_degree = 20;
    CHECK(stable(verify_theorem(bounds, one)) == stable(verify_theorem(bounds, three)));

    FrobeniusBounds fb{12, 8};
    CHECK(stable(verify_frobenius(fb, one)) == stable(verify_frobenius(fb, three)));

    LemmaBounds lb;
    lb.union_max_length = 3;
    lb.union_max_entry = 10;
    lb.distributive_max_length = 2;
    lb.distributive_max_entry = 12;
    lb.binary_max = 40;
    CHECK(stable(verify_lemmas(lb, one)) == stable(verify_lemmas(lb, three)));
}

TEST_CASE("the seed reaches the permutation check only")
{
    SweepBounds bounds;
    bounds.max_weight = 5;
    SweepOptions a;
    SweepOptions b;
    b.seed = 12345;
    const auto ra = verify_proposition(bounds, a);
    const auto rb = verify_proposition(bounds, b);
    CHECK(ra.instances_checked == rb.instances_checked);
    CHECK(ra.passed());
    CHECK(rb.passed());
}

TEST_CASE("an interrupted sweep is incomplete and does not pass")
{
    std::stop_source source;
    source.request_stop();
    SweepOptions options;
    options.stop = source.get_token();
    SweepBounds bounds;
    bounds.max_weight = 6;
    const auto report = verify_proposition(bounds, options);
    CHECK_FALSE(report.complete);
    CHECK_FALSE(report.passed());
    CHECK(to_json(report)["verdict"] == "fail");
}

TEST_CASE("Frobenius suite on small bounds")
{
    const auto report = verify_frobenius(FrobeniusBounds{15, 8});
    CHECK(report.passed());
    CHECK(report.tallies.at("pairs") == 15 * 15);
    CHECK(report.tallies.at("triples") == 8 * 8 * 8);
    CHECK(report.tallies.at("sharpness") > 0);
}

TEST_CASE("lemma suites on small bounds")
{
    LemmaBounds lb;
    lb.union_max_length = 4;
    lb.union_max_entry = 12;
    lb.distributive_max_length = 3;
    lb.distributive_max_entry = 15;
    lb.binary_max = 60;
    const auto report = verify_lemmas(lb);
    CHECK(report.passed());
    // Strictly increasing lists of length 1..3 over [1, 15].
    CHECK(report.tallies.at("distributive.lists") == 15 + 105 + 455);
    CHECK(report.tallies.at("distributive.classes") <= report.tallies.at("distributive.lists"));
}

TEST_CASE("three-element sequences fail only in the expected shape")
{
    const auto report = verify_two_variable(12);
    CHECK(report.passed());
    CHECK(report.instances_checked == 405072);
    CHECK(report.failures_for("failure_shape") == 0);
}
