#include "ewci/arith.hpp"

#include <algorithm>
#include <numeric>

namespace ewci {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::EmptySubset: return "EmptySubset";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::WrongArity: return "WrongArity";
    case ErrorKind::SequenceTooShort: return "SequenceTooShort";
    case ErrorKind::SplitOutOfRange: return "SplitOutOfRange";
    case ErrorKind::HypothesesViolated: return "HypothesesViolated";
    case ErrorKind::SplitImpossible: return "SplitImpossible";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::CounterexampleFound: return "CounterexampleFound";
    case ErrorKind::TheoremCounterexample: return "TheoremCounterexample";
    }
    return "Unknown";
}

std::string to_string(Int value)
{
    if (value == 0) return "0";
    const bool negative = value < 0;
    // Work in unsigned space so the most negative value is handled.
    unsigned __int128 magnitude =
        negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(value)
                 : static_cast<unsigned __int128>(value);
    std::string digits;
    while (magnitude != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
        magnitude /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b) noexcept
{
    constexpr Int small = static_cast<Int>(UINT64_MAX);
    if (a <= small && b <= small) {
        return static_cast<Int>(
            std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b)));
    }
    while (b != 0) {
        const Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int lcm(Int a, Int b)
{
    if (a <= 0 || b <= 0) throw Error(ErrorKind::InvalidInput, "lcm requires positive arguments");
    return checked_mul(a / gcd(a, b), b);
}

WeightSequence::WeightSequence(std::vector<std::int64_t> weights) : weights_(std::move(weights))
{
    if (weights_.empty()) throw Error(ErrorKind::InvalidInput, "weight sequence must be nonempty");
    for (auto w : weights_) {
        if (w < 1) throw Error(ErrorKind::InvalidInput, "weights must be positive");
    }
}

Int WeightSequence::sum() const
{
    Int total = 0;
    for (auto w : weights_) total = checked_add(total, w);
    return total;
}

WeightSequence WeightSequence::reversed() const
{
    return WeightSequence(std::vector<std::int64_t>(weights_.rbegin(), weights_.rend()));
}

std::string to_string(const WeightSequence& a)
{
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != 0) out += ",";
        out += std::to_string(a[i]);
    }
    return out + ")";
}

IndexSubset::IndexSubset(std::vector<std::size_t> indices) : indices_(std::move(indices))
{
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw Error(ErrorKind::InvalidInput, "index subset has repeated entries");
    }
}

IndexSubset IndexSubset::united(const IndexSubset& other) const
{
    std::vector<std::size_t> merged;
    std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                   other.indices_.end(), std::back_inserter(merged));
    return IndexSubset(std::move(merged));
}

Int gcd_subset(const WeightSequence& a, const IndexSubset& subset)
{
    if (subset.empty()) throw Error(ErrorKind::EmptySubset, "a_I is undefined for the empty subset");
    Int g = 0;
    for (auto i : subset) {
        if (i >= a.size()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "index " + std::to_string(i) + " outside " + to_string(a));
        }
        g = gcd(g, a[i]);
    }
    return g;
}

Int gcd_pair(const WeightSequence& a, std::size_t i, std::size_t j) noexcept
{
    return gcd(a[i], a[j]);
}

Int gcd_triple(const WeightSequence& a, std::size_t i, std::size_t j, std::size_t k) noexcept
{
    return gcd(gcd(a[i], a[j]), a[k]);
}

Int lcm_list(std::span<const Int> xs)
{
    if (xs.empty()) throw Error(ErrorKind::InvalidInput, "lcm_list requires a nonempty list");
    Int acc = 1;
    for (auto x : xs) acc = lcm(acc, x);
    return acc;
}

Int lcm_list(std::initializer_list<Int> xs)
{
    return lcm_list(std::span<const Int>(xs.begin(), xs.size()));
}

Int gcd_of_lcms(std::span<const Int> as, std::span<const Int> bs)
{
    return gcd(lcm_list(as), lcm_list(bs));
}

Int lcm_of_pairwise_gcds(std::span<const Int> as, std::span<const Int> bs)
{
    if (as.empty() || bs.empty()) {
        throw Error(ErrorKind::InvalidInput, "lcm_of_pairwise_gcds requires nonempty lists");
    }
    Int acc = 1;
    for (auto x : as) {
        if (x < 1) throw Error(ErrorKind::InvalidInput, "entries must be positive");
        for (auto y : bs) {
            if (y < 1) throw Error(ErrorKind::InvalidInput, "entries must be positive");
            acc = lcm(acc, gcd(x, y));
        }
    }
    return acc;
}

} // namespace ewci
