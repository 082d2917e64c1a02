#ifndef EWCI_NONVANISH_HPP
#define EWCI_NONVANISH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewci/arith.hpp"

namespace ewci {

struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

// Split-dependent divisibility data for a sequence a, a split point
// s in [-1, n] and a degree h.
//
//   sigma1: pairs {i,j} with s < i < j <= n and a_{i,j} not dividing h
//   sigma2: pairs {i,j} with 0 <= i < j <= s and a_{i,j} not dividing h
//   h1, h2: lcm of a_{i,j} over sigma1, sigma2 (1 when empty)
//   f1:     lcm of a_j for j <= s together with h1
//   f2:     lcm of a_j for j > s together with h2
struct SplitProfile {
    int s = -1;
    std::vector<IndexPair> sigma1;
    std::vector<IndexPair> sigma2;
    Int h1 = 1;
    Int h2 = 1;
    Int f1 = 1;
    Int f2 = 1;

    friend bool operator==(const SplitProfile&, const SplitProfile&) = default;
};

enum class CertificateKind { Couple, Triple };

std::string to_string(CertificateKind kind);

// A couple {u,v} or triple {u,v,w} whose bound is dominated by
// lhs = f1 + f2 - sum(a). For a triple, (u,v) is the pair entering the first
// lcm and w the third generator, so the bound is
// lcm(a_u,a_v) + lcm(a_{u,v}, a_w) - a_u - a_v - a_w.
struct NonvanishingCertificate {
    CertificateKind kind = CertificateKind::Couple;
    std::vector<std::size_t> indices;  // (u, v) or (u, v, w)
    Int bound = 0;
    Int lhs = 0;

    friend bool operator==(const NonvanishingCertificate&, const NonvanishingCertificate&) = default;
};

// Raised by find_certificate when no couple or triple works. Carries
// everything needed to replay the cell.
class CounterexampleFound : public Error {
public:
    CounterexampleFound(WeightSequence a, std::int64_t h, SplitProfile profile);

    [[nodiscard]] const WeightSequence& weights() const noexcept { return weights_; }
    [[nodiscard]] std::int64_t h() const noexcept { return h_; }
    [[nodiscard]] const SplitProfile& profile() const noexcept { return profile_; }

private:
    WeightSequence weights_;
    std::int64_t h_;
    SplitProfile profile_;
};

// a_i does not divide h for any i, and a_I divides h for every |I| = 3.
// Requires n >= 3.
[[nodiscard]] bool hypotheses_hold(const WeightSequence& a, std::int64_t h);

// Same test without the length requirement; used for the n = 2 suite.
[[nodiscard]] bool hypotheses_hold_any_length(const WeightSequence& a, std::int64_t h);

// Validated profile: n >= 3, s in range, hypotheses hold.
[[nodiscard]] SplitProfile compute_profile(const WeightSequence& a, int s, std::int64_t h);

// Evaluates the defining formulas only; no hypothesis or length checks
// beyond s being in [-1, n].
[[nodiscard]] SplitProfile evaluate_profile(const WeightSequence& a, int s, std::int64_t h);

// f1 + f2 - sum(a).
[[nodiscard]] Int profile_lhs(const WeightSequence& a, const SplitProfile& profile);

// Search order: couples {u<v} lexicographically, then triples {i<j<k}
// lexicographically, each trying w = k, w = j, w = i in turn.
// Couples must satisfy a_{u,v} | h; triples carry no divisibility condition.
[[nodiscard]] std::optional<NonvanishingCertificate>
search_certificate(const WeightSequence& a, std::int64_t h, const SplitProfile& profile);

// compute_profile followed by search_certificate; throws CounterexampleFound
// when the search comes back empty.
[[nodiscard]] NonvanishingCertificate find_certificate(const WeightSequence& a, int s,
                                                       std::int64_t h);

// No divisibility relation inside {0..s} nor inside {s+1..n}.
[[nodiscard]] bool star_condition(const WeightSequence& a, int s);

} // namespace ewci

#endif // EWCI_NONVANISH_HPP
