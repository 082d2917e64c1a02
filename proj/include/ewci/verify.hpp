#ifndef EWCI_VERIFY_HPP
#define EWCI_VERIFY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <stop_token>
#include <string>
#include <vector>

#include <json.hpp>

#include "ewci/arith.hpp"

namespace ewci {

// Domain of an exhaustive sweep. h runs over one full period [1, lcm(a)]
// unless h_cap is set, in which case it runs over [1, h_cap].
struct SweepBounds {
    int n_min = 3;
    int n_max = 3;
    std::int64_t max_weight = 1;
    std::int64_t max_degree = 0;  // theorem sweep only
    std::optional<std::int64_t> h_cap;

    [[nodiscard]] nlohmann::json to_json() const;
};

struct FrobeniusBounds {
    std::int64_t max_pair = 30;
    std::int64_t max_triple = 20;
};

// Domains for the gcd/lcm identity and inequality suites.
struct LemmaBounds {
    int union_max_length = 6;
    std::int64_t union_max_entry = 30;
    int distributive_max_length = 4;
    std::int64_t distributive_max_entry = 50;
    std::int64_t binary_max = 500;
    std::int64_t reciprocal_min_entry = 2;
    std::int64_t reciprocal_max_entry = 12;
    std::int64_t reciprocal_max_multiplier = 5;
};

struct SweepOptions {
    unsigned jobs = 1;
    std::uint64_t seed = 0x5eedULL;
    std::stop_token stop;
    // Counterexample records kept in the report (after sorting); the total
    // is always reported.
    std::size_t max_recorded = 1000;
};

struct VerificationReport {
    std::string suite;
    nlohmann::json bounds;
    std::uint64_t instances_checked = 0;
    std::vector<nlohmann::json> counterexamples;
    std::uint64_t counterexamples_total = 0;
    std::uint64_t overflow_cells = 0;
    // Per-check cell counts and path tallies, keyed by check name.
    std::map<std::string, std::uint64_t> tallies;
    // Counterexample totals per check name.
    std::map<std::string, std::uint64_t> failures;
    bool complete = true;
    std::int64_t elapsed_ms = 0;

    [[nodiscard]] bool vacuous() const noexcept { return instances_checked == 0; }
    [[nodiscard]] bool passed() const noexcept
    {
        return counterexamples_total == 0 && overflow_cells == 0 && complete;
    }
    [[nodiscard]] std::uint64_t failures_for(const std::string& check) const;
};

// Stable JSON form; `elapsed_ms` is the only field that varies between
// identical runs.
[[nodiscard]] nlohmann::json to_json(const VerificationReport& report);

// Nondecreasing sequences with n in [n_min, n_max] and entries in
// [1, max_weight], ordered by n and then lexicographically.
class SequenceStream {
public:
    explicit SequenceStream(const SweepBounds& bounds);

    [[nodiscard]] std::optional<WeightSequence> next();

private:
    int n_;
    int n_max_;
    std::int64_t max_weight_;
    std::vector<std::int64_t> current_;
    bool started_ = false;
};

[[nodiscard]] std::vector<WeightSequence> enumerate_sequences(const SweepBounds& bounds);

// Every (a, s, h) cell with the proposition's hypotheses must admit a
// certificate; also checks monotonicity of f1/f2 in s, the s <-> n-1-s
// reversal symmetry, and certificate existence under a seeded random
// permutation of each sequence.
[[nodiscard]] VerificationReport verify_proposition(const SweepBounds& bounds,
                                                    const SweepOptions& options = {});

// Soundness of the couple/triple sufficiency bounds against the DP table,
// sharpness on coprime pairs, and agreement of find_representation with the
// table.
[[nodiscard]] VerificationReport verify_frobenius(const FrobeniusBounds& bounds,
                                                  const SweepOptions& options = {});

// End-to-end witness pipeline over weights, degree pairs d1, d2 <= max_degree
// and, per degree pair, h over one period above the threshold:
// max(0, d1+d2-sum(a)) < h <= max(0, d1+d2-sum(a)) + lcm(a).
[[nodiscard]] VerificationReport verify_theorem(const SweepBounds& bounds,
                                                const SweepOptions& options = {});

// gcd/lcm identities and inequalities.
[[nodiscard]] VerificationReport verify_lemmas(const LemmaBounds& bounds,
                                               const SweepOptions& options = {});

// Three-element sequences (n = 2), entries in [1, max_entry], every split and
// every h in one period with the hypotheses: whenever no certificate exists,
// s is -1 or 2, exactly one pair J has a_J not dividing h, and each a_i with
// i in J divides the lcm of the other two weights.
[[nodiscard]] VerificationReport verify_two_variable(std::int64_t max_entry,
                                                     const SweepOptions& options = {});

} // namespace ewci

#endif // EWCI_VERIFY_HPP
