#include "ewci/semigroup.hpp"

#include <string>

namespace ewci {

namespace {

// Membership tables are linear in h; anything beyond this is a caller bug.
constexpr std::int64_t kMaxTableSize = 1'000'000'000;

void require_positive_h(std::int64_t h)
{
    if (h < 1) throw Error(ErrorKind::InvalidInput, "h must be positive, got " + std::to_string(h));
}

// Inverse of x modulo m for gcd(x, m) = 1 and m >= 1.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m)
{
    Int old_r = x % m, r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        const Int q = old_r / r;
        Int t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    Int inv = old_s % m;
    if (inv < 0) inv += m;
    return static_cast<std::int64_t>(inv);
}

// Smallest k0 with value - k0*p >= 0 divisible by q, given inv = (p/g)^-1
// mod (q/g). Returns -1 when no such k0 exists.
std::int64_t smallest_first_exponent(std::int64_t value, std::int64_t p, std::int64_t q,
                                     std::int64_t g, std::int64_t inv)
{
    if (value % g != 0) return -1;
    const std::int64_t modulus = q / g;
    const Int target = (value / g) % modulus;
    const auto k0 = static_cast<std::int64_t>((target * inv) % modulus);
    if (static_cast<Int>(k0) * p > value) return -1;
    return k0;
}

} // namespace

CoinSystem::CoinSystem(std::vector<std::int64_t> generators) : generators_(std::move(generators))
{
    if (generators_.empty() || generators_.size() > 3) {
        throw Error(ErrorKind::WrongArity, "a coin system has one to three generators");
    }
    for (auto g : generators_) {
        if (g < 1) throw Error(ErrorKind::InvalidInput, "generators must be positive");
    }
}

std::vector<bool> representable_up_to(std::span<const std::int64_t> generators,
                                      std::int64_t limit)
{
    if (limit < 0 || limit > kMaxTableSize) {
        throw Error(ErrorKind::InvalidInput, "table limit out of range: " + std::to_string(limit));
    }
    for (auto g : generators) {
        if (g < 1) throw Error(ErrorKind::InvalidInput, "generators must be positive");
    }
    std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
    reach[0] = true;
    for (std::int64_t v = 1; v <= limit; ++v) {
        for (auto g : generators) {
            if (g <= v && reach[static_cast<std::size_t>(v - g)]) {
                reach[static_cast<std::size_t>(v)] = true;
                break;
            }
        }
    }
    return reach;
}

bool is_representable(const CoinSystem& sys, std::int64_t h)
{
    require_positive_h(h);
    return representable_up_to(sys.generators(), h).back();
}

std::optional<Representation> find_representation(const CoinSystem& sys, std::int64_t h)
{
    require_positive_h(h);
    const auto gens = sys.generators();

    if (gens.size() == 1) {
        if (h % gens[0] != 0) return std::nullopt;
        return Representation{{h / gens[0]}, h};
    }

    // The last two generators are solved in closed form; a leading third
    // generator is scanned in increasing exponent order.
    const std::int64_t p = gens[gens.size() - 2];
    const std::int64_t q = gens[gens.size() - 1];
    const auto g = static_cast<std::int64_t>(gcd(p, q));
    const std::int64_t inv = inverse_mod((p / g) % (q / g), q / g);

    auto solve_tail = [&](std::int64_t value) -> std::optional<std::pair<std::int64_t, std::int64_t>> {
        const std::int64_t k = smallest_first_exponent(value, p, q, g, inv);
        if (k < 0) return std::nullopt;
        return std::pair{k, (value - k * p) / q};
    };

    if (gens.size() == 2) {
        auto tail = solve_tail(h);
        if (!tail) return std::nullopt;
        return Representation{{tail->first, tail->second}, h};
    }

    const std::int64_t head = gens[0];
    if (h % static_cast<std::int64_t>(gcd(head, g)) != 0) return std::nullopt;
    for (std::int64_t k0 = 0; k0 <= h / head; ++k0) {
        if (auto tail = solve_tail(h - k0 * head)) {
            return Representation{{k0, tail->first, tail->second}, h};
        }
    }
    return std::nullopt;
}

Int frobenius_bound_two(std::int64_t a0, std::int64_t a1)
{
    if (a0 < 1 || a1 < 1) throw Error(ErrorKind::InvalidInput, "generators must be positive");
    return checked_sub(checked_sub(lcm(a0, a1), a0), a1);
}

Int frobenius_bound_three(std::int64_t a0, std::int64_t a1, std::int64_t a2)
{
    if (a0 < 1 || a1 < 1 || a2 < 1) throw Error(ErrorKind::InvalidInput, "generators must be positive");
    const Int first = lcm(a0, a1);
    const Int second = lcm(gcd(a0, a1), a2);
    Int bound = checked_add(first, second);
    bound = checked_sub(bound, a0);
    bound = checked_sub(bound, a1);
    return checked_sub(bound, a2);
}

bool guaranteed_representable(const CoinSystem& sys, std::int64_t h)
{
    require_positive_h(h);
    if (sys.size() == 2) {
        return divides(gcd(sys[0], sys[1]), h) && h > frobenius_bound_two(sys[0], sys[1]);
    }
    if (sys.size() == 3) {
        return divides(gcd(gcd(sys[0], sys[1]), sys[2]), h) &&
               h > frobenius_bound_three(sys[0], sys[1], sys[2]);
    }
    throw Error(ErrorKind::WrongArity, "the sufficiency bounds need two or three generators");
}

} // namespace ewci
