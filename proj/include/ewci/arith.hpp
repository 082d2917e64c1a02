#ifndef EWCI_ARITH_HPP
#define EWCI_ARITH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ewci/error.hpp"

namespace ewci {

// Signed 127-bit working integer. Every lcm/sum chain in the library is
// carried out in this type with explicit overflow detection.
using Int = __int128;

std::string to_string(Int value);

[[nodiscard]] Int checked_add(Int a, Int b);
[[nodiscard]] Int checked_sub(Int a, Int b);
[[nodiscard]] Int checked_mul(Int a, Int b);

// gcd of nonnegative values; gcd(0, x) = x.
[[nodiscard]] Int gcd(Int a, Int b) noexcept;

// lcm of two positive values, throws OverflowError if the result leaves the
// working range.
[[nodiscard]] Int lcm(Int a, Int b);

[[nodiscard]] inline bool divides(Int d, Int x) noexcept { return x % d == 0; }

// The weights a_0, ..., a_n of an ambient weighted projective space.
class WeightSequence {
public:
    WeightSequence() = default;
    explicit WeightSequence(std::vector<std::int64_t> weights);
    WeightSequence(std::initializer_list<std::int64_t> weights)
        : WeightSequence(std::vector<std::int64_t>(weights)) {}

    // Index of the last entry.
    [[nodiscard]] std::size_t n() const noexcept { return weights_.size() - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept { return weights_[i]; }
    [[nodiscard]] std::span<const std::int64_t> values() const noexcept { return weights_; }
    [[nodiscard]] auto begin() const noexcept { return weights_.begin(); }
    [[nodiscard]] auto end() const noexcept { return weights_.end(); }

    [[nodiscard]] Int sum() const;
    [[nodiscard]] WeightSequence reversed() const;

    friend bool operator==(const WeightSequence&, const WeightSequence&) = default;

private:
    std::vector<std::int64_t> weights_;
};

std::string to_string(const WeightSequence& a);

// A set of distinct indices into a WeightSequence, kept sorted.
class IndexSubset {
public:
    IndexSubset() = default;
    explicit IndexSubset(std::vector<std::size_t> indices);
    IndexSubset(std::initializer_list<std::size_t> indices)
        : IndexSubset(std::vector<std::size_t>(indices)) {}

    [[nodiscard]] bool empty() const noexcept { return indices_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return indices_.size(); }
    [[nodiscard]] auto begin() const noexcept { return indices_.begin(); }
    [[nodiscard]] auto end() const noexcept { return indices_.end(); }

    [[nodiscard]] IndexSubset united(const IndexSubset& other) const;

private:
    std::vector<std::size_t> indices_;
};

// a_I: gcd of the weights indexed by a nonempty subset I.
[[nodiscard]] Int gcd_subset(const WeightSequence& a, const IndexSubset& subset);

// Shorthands for the couple/triple cases used throughout.
[[nodiscard]] Int gcd_pair(const WeightSequence& a, std::size_t i, std::size_t j) noexcept;
[[nodiscard]] Int gcd_triple(const WeightSequence& a, std::size_t i, std::size_t j,
                             std::size_t k) noexcept;

// Rejects the empty list; folds over possibly-empty ranges start from 1
// at the call site instead.
[[nodiscard]] Int lcm_list(std::span<const Int> xs);
[[nodiscard]] Int lcm_list(std::initializer_list<Int> xs);

// gcd(lcm(as), lcm(bs)).
[[nodiscard]] Int gcd_of_lcms(std::span<const Int> as, std::span<const Int> bs);

// lcm over all pairs of gcd(a_i, b_j); equal to gcd_of_lcms by the
// distributivity of the divisor lattice, evaluated here without using it.
[[nodiscard]] Int lcm_of_pairwise_gcds(std::span<const Int> as, std::span<const Int> bs);

} // namespace ewci

#endif // EWCI_ARITH_HPP
