#ifndef EWCI_WCI_HPP
#define EWCI_WCI_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ewci/arith.hpp"
#include "ewci/nonvanish.hpp"

namespace ewci {

// Weights a_0..a_n (n >= 3) and the two defining degrees of a codimension-2
// weighted complete intersection.
class WCIInstance {
public:
    WCIInstance(WeightSequence weights, std::int64_t d1, std::int64_t d2);

    [[nodiscard]] const WeightSequence& weights() const noexcept { return weights_; }
    [[nodiscard]] std::int64_t d1() const noexcept { return d1_; }
    [[nodiscard]] std::int64_t d2() const noexcept { return d2_; }

    // Arithmetic proxy for a linear cone: some degree equals some weight.
    [[nodiscard]] bool linear_cone() const noexcept;

private:
    WeightSequence weights_;
    std::int64_t d1_;
    std::int64_t d2_;
};

// A monomial prod x_i^{k_i} of weighted degree `degree`, at most three
// variables, every stored exponent positive.
struct SectionWitness {
    std::map<std::size_t, std::int64_t> terms;
    std::int64_t degree = 0;

    friend bool operator==(const SectionWitness&, const SectionWitness&) = default;
};

std::string to_string(const SectionWitness& witness);

// Sum of k_i * a_i over the witness terms.
[[nodiscard]] Int witness_degree(const SectionWitness& witness, const WeightSequence& a);

// d1 + d2 - sum(a).
[[nodiscard]] Int canonical_degree(const WCIInstance& inst);

// Every 3-subset gcd divides h, and every 2-subset gcd not dividing h
// divides both d1 and d2.
[[nodiscard]] bool cartier_conditions(const WCIInstance& inst, std::int64_t h);

// A reordering of the weights (order[k] is the original index placed at
// position k) with positions 0..s on the d1 side and s+1..n on the d2 side.
struct SplitChoice {
    std::vector<std::size_t> order;
    int s = -1;

    friend bool operator==(const SplitChoice&, const SplitChoice&) = default;
};

class SplitImpossible : public Error {
public:
    SplitImpossible(std::size_t index, const std::string& what)
        : Error(ErrorKind::SplitImpossible, what), index_(index) {}

    [[nodiscard]] std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Greedy split: a_i | d1 goes to the d1 side, otherwise to the d2 side.
// Indices with a_i not dividing h must divide d1 or d2, else SplitImpossible.
// Each side is sorted by (weight, original index).
[[nodiscard]] SplitChoice choose_split(const WCIInstance& inst, std::int64_t h);

// Every valid split: each index with a_i not dividing h that divides both
// degrees may sit on either side. The greedy split comes first.
[[nodiscard]] std::vector<SplitChoice> all_splits(const WCIInstance& inst, std::int64_t h);

[[nodiscard]] WeightSequence reorder(const WeightSequence& a, const SplitChoice& split);

struct HypothesisCheck {
    std::string name;
    bool passed = true;
    bool enforced = true;
    // Offending index sets (a single index, a pair, a triple, ...).
    std::vector<std::vector<std::size_t>> failures;
    std::string detail;
};

struct ValidationReport {
    std::vector<HypothesisCheck> checks;
    bool linear_cone = false;

    // All enforced checks passed.
    [[nodiscard]] bool all_pass() const noexcept;
    [[nodiscard]] const HypothesisCheck* find(std::string_view name) const noexcept;
};

// Collects every hypothesis the witness pipeline relies on. Never throws for
// well-formed instances; the linear-cone and ambient-gcd checks are reported
// but not enforced.
[[nodiscard]] ValidationReport validate_instance(const WCIInstance& inst, std::int64_t h);

enum class WitnessPath {
    SingleVariable,        // some a_i divides h
    Certificate,           // greedy split, couple/triple certificate
    AlternateSplitCertificate,
    ExhaustiveFallback,    // none of the above; should never happen
};

std::string to_string(WitnessPath path);

struct WitnessOutcome {
    SectionWitness witness;
    WitnessPath path = WitnessPath::SingleVariable;
    std::optional<SplitChoice> split;
    std::optional<SplitProfile> profile;
    std::optional<NonvanishingCertificate> certificate;
};

class TheoremCounterexample : public Error {
public:
    TheoremCounterexample(const WCIInstance& inst, std::int64_t h);

    [[nodiscard]] const WCIInstance& instance() const noexcept { return instance_; }
    [[nodiscard]] std::int64_t h() const noexcept { return h_; }

private:
    WCIInstance instance_;
    std::int64_t h_;
};

// Runs the full pipeline and reports how the witness was obtained.
// Throws Error(PreconditionViolated) when validate_instance does not pass.
[[nodiscard]] WitnessOutcome solve_section(const WCIInstance& inst, std::int64_t h);

[[nodiscard]] SectionWitness find_section_witness(const WCIInstance& inst, std::int64_t h);

} // namespace ewci

#endif // EWCI_WCI_HPP
