#ifndef EWCI_SEMIGROUP_HPP
#define EWCI_SEMIGROUP_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "ewci/arith.hpp"

namespace ewci {

// Generators of a numerical semigroup, one to three of them.
class CoinSystem {
public:
    explicit CoinSystem(std::vector<std::int64_t> generators);
    CoinSystem(std::initializer_list<std::int64_t> generators)
        : CoinSystem(std::vector<std::int64_t>(generators)) {}

    [[nodiscard]] std::size_t size() const noexcept { return generators_.size(); }
    [[nodiscard]] std::int64_t operator[](std::size_t i) const noexcept { return generators_[i]; }
    [[nodiscard]] std::span<const std::int64_t> generators() const noexcept { return generators_; }

private:
    std::vector<std::int64_t> generators_;
};

// Exponents k_i, one per generator, with sum k_i * g_i equal to `value`.
struct Representation {
    std::vector<std::int64_t> exponents;
    std::int64_t value = 0;

    friend bool operator==(const Representation&, const Representation&) = default;
};

// Membership table over 0..limit for the semigroup generated by `generators`
// (any number of positive generators). Entry 0 is always true.
[[nodiscard]] std::vector<bool> representable_up_to(std::span<const std::int64_t> generators,
                                                    std::int64_t limit);

// Exact membership decided by dynamic programming over 0..h.
[[nodiscard]] bool is_representable(const CoinSystem& sys, std::int64_t h);

// The lexicographically smallest exponent vector (k_0 minimized first, then
// k_1, ...) representing h, or nullopt when h is not in the semigroup.
[[nodiscard]] std::optional<Representation> find_representation(const CoinSystem& sys,
                                                                 std::int64_t h);

// lcm(a0,a1) - a0 - a1; may be negative.
[[nodiscard]] Int frobenius_bound_two(std::int64_t a0, std::int64_t a1);

// lcm(a0,a1) + lcm(gcd(a0,a1), a2) - a0 - a1 - a2; may be negative.
[[nodiscard]] Int frobenius_bound_three(std::int64_t a0, std::int64_t a1, std::int64_t a2);

// True when the gcd of the generators divides h and h strictly exceeds the
// matching bound above. Sound: never true for a non-representable h.
[[nodiscard]] bool guaranteed_representable(const CoinSystem& sys, std::int64_t h);

} // namespace ewci

#endif // EWCI_SEMIGROUP_HPP
