#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "ewci/verify.hpp"
#include "sweep_detail.hpp"

namespace ewci {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

// gcd(a_I, a_J) = a_{I u J} for every pair of nonempty subsets of every
// nondecreasing sequence whose first entry is `first`. Reordering a sequence
// only relabels its subsets, so nondecreasing sequences cover all of them.
void union_suite(std::int64_t first, int length, std::int64_t max_entry, detail::Tally& tally)
{
    const auto top = static_cast<std::size_t>(max_entry);
    std::vector<std::uint32_t> gcd_table((top + 1) * (top + 1));
    for (std::size_t x = 0; x <= top; ++x) {
        for (std::size_t y = 0; y <= top; ++y) {
            gcd_table[x * (top + 1) + y] = static_cast<std::uint32_t>(std::gcd(x, y));
        }
    }
    auto g = [&](std::uint32_t x, std::uint32_t y) { return gcd_table[x * (top + 1) + y]; };

    const auto len = static_cast<std::size_t>(length);
    const std::uint32_t subsets = 1U << len;
    std::vector<std::int64_t> seq(len, first);
    std::vector<std::uint32_t> sub(subsets);
    std::uint64_t cells = 0;

    for (;;) {
        // a_I folded from its lowest member.
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            const auto low = static_cast<std::size_t>(std::countr_zero(mask));
            const std::uint32_t rest = mask & (mask - 1);
            const auto v = static_cast<std::uint32_t>(seq[low]);
            sub[mask] = rest == 0 ? v : g(sub[rest], v);
        }
        for (std::uint32_t i = 1; i < subsets; ++i) {
            for (std::uint32_t j = i; j < subsets; ++j) {
                if (g(sub[i], sub[j]) != sub[i | j]) {
                    tally.fail("gcd_union", {{"sequence", seq}, {"I", i}, {"J", j}});
                }
            }
        }
        cells += static_cast<std::uint64_t>(subsets - 1) * subsets / 2;

        std::size_t k = len;
        while (k > 1 && seq[k - 1] == max_entry) --k;
        if (k <= 1) break;
        const std::int64_t v = seq[k - 1] + 1;
        std::fill(seq.begin() + static_cast<std::ptrdiff_t>(k - 1), seq.end(), v);
    }
    tally.add_instances(cells);
}

// Lists for the gcd/lcm distributivity suite. Order and repeated entries
// change neither side of the identity, so strictly increasing lists stand
// for all lists.
struct ListFamily {
    std::vector<std::vector<std::int64_t>> members;     // one representative per class
    std::vector<std::uint64_t> lcms;
    std::vector<std::vector<std::uint64_t>> signatures;  // sig[c] = lcm_i gcd(a_i, c)
    std::uint64_t lists = 0;
};

// Two lists with equal lcm and equal signature give the same value on both
// sides against any partner list: the left side only sees the lcm, and the
// right side regroups as lcm over partner entries b of sig[b]. One
// representative per class is therefore exhaustive.
ListFamily build_family(int max_length, std::int64_t max_entry)
{
    ListFamily family;
    std::map<std::vector<std::uint64_t>, std::size_t> seen;
    std::vector<std::int64_t> list;

    auto visit = [&](auto&& self, std::int64_t start) -> void {
        if (!list.empty()) {
            ++family.lists;
            std::vector<std::uint64_t> key(static_cast<std::size_t>(max_entry) + 1, 1);
            std::uint64_t l = 1;
            for (auto x : list) l = std::lcm(l, static_cast<std::uint64_t>(x));
            key[0] = l;
            for (std::int64_t c = 1; c <= max_entry; ++c) {
                std::uint64_t acc = 1;
                for (auto x : list) acc = std::lcm(acc, std::gcd(static_cast<std::uint64_t>(x),
                                                                 static_cast<std::uint64_t>(c)));
                key[static_cast<std::size_t>(c)] = acc;
            }
            if (seen.emplace(key, family.members.size()).second) {
                family.members.push_back(list);
                family.lcms.push_back(l);
                family.signatures.push_back(std::move(key));
            }
        }
        if (static_cast<int>(list.size()) == max_length) return;
        for (std::int64_t x = start; x <= max_entry; ++x) {
            list.push_back(x);
            self(self, x + 1);
            list.pop_back();
        }
    };
    visit(visit, 1);
    return family;
}

void distributive_suite(const ListFamily& family, std::size_t first, detail::Tally& tally)
{
    const auto& sig_a = family.signatures[first];
    const std::uint64_t lcm_a = family.lcms[first];
    for (std::size_t second = first; second < family.members.size(); ++second) {
        const std::uint64_t lhs = std::gcd(lcm_a, family.lcms[second]);
        std::uint64_t rhs = 1;
        for (auto b : family.members[second]) rhs = std::lcm(rhs, sig_a[static_cast<std::size_t>(b)]);
        if (lhs != rhs) {
            tally.fail("gcd_lcm_distributive",
                       {{"as", family.members[first]}, {"bs", family.members[second]},
                        {"gcd_of_lcms", lhs}, {"lcm_of_gcds", rhs}});
        }
    }
    tally.add_instances(family.members.size() - first);
}

void binary_suite(std::int64_t a, std::int64_t max, detail::Tally& tally)
{
    for (std::int64_t b = 1; b <= max; ++b) {
        const std::int64_t l = std::lcm(a, b);
        const std::int64_t g = std::gcd(a, b);
        if (a % b != 0 && b % a != 0) {
            tally.count("lcm_non_dividing.cells");
            if (!(l >= 2 * std::max(a, b) && 2 * std::max(a, b) >= a + b)) {
                tally.fail("lcm_non_dividing", {{"a", a}, {"b", b}});
            }
        }
        if (l + g < a + b) tally.fail("lcm_plus_gcd", {{"a", a}, {"b", b}});
    }
    tally.add_instances(static_cast<std::uint64_t>(max));
}

void reciprocal_suite(const LemmaBounds& bounds, detail::Tally& tally)
{
    const std::int64_t lo = bounds.reciprocal_min_entry;
    const std::int64_t hi = bounds.reciprocal_max_entry;
    const std::int64_t kmax = bounds.reciprocal_max_multiplier;
    std::uint64_t cells = 0;
    for (std::int64_t a1 = lo; a1 <= hi; ++a1) {
        for (std::int64_t a2 = lo; a2 <= hi; ++a2) {
            for (std::int64_t a3 = lo; a3 <= hi; ++a3) {
                if (a1 == a2 || a1 == a3 || a2 == a3) continue;
                for (std::int64_t k1 = 1; k1 <= kmax; ++k1) {
                    for (std::int64_t k2 = 1; k2 <= kmax; ++k2) {
                        for (std::int64_t k3 = 1; k3 <= kmax; ++k3) {
                            if (k1 * k2 * k3 <= 1) continue;
                            ++cells;
                            // 1 - sum 1/(k_i a_i) >= 0, cleared of denominators.
                            const Int x = k1 * a1, y = k2 * a2, z = k3 * a3;
                            if (x * y * z < y * z + x * z + x * y) {
                                tally.fail("reciprocal_sum", {{"a", {a1, a2, a3}}, {"k", {k1, k2, k3}}});
                            }
                        }
                    }
                }
            }
        }
    }
    tally.add_instances(cells);
}

} // namespace

VerificationReport verify_lemmas(const LemmaBounds& bounds, const SweepOptions& options)
{
    require(bounds.union_max_length >= 1 && bounds.union_max_length <= 16, "union length out of range");
    require(bounds.union_max_entry >= 1 && bounds.union_max_entry <= 4096, "union entry cap out of range");
    require(bounds.distributive_max_length >= 1, "distributive length must be at least 1");
    require(bounds.distributive_max_entry >= 1 && bounds.distributive_max_entry <= 200,
            "distributive entry cap out of range");
    require(bounds.binary_max >= 1, "binary cap must be at least 1");
    require(bounds.reciprocal_min_entry >= 1 && bounds.reciprocal_min_entry <= bounds.reciprocal_max_entry,
            "reciprocal range is empty");
    require(bounds.reciprocal_max_multiplier >= 1, "multiplier cap must be at least 1");

    detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "lemmas";
    report.bounds = {
        {"union_max_length", bounds.union_max_length},
        {"union_max_entry", bounds.union_max_entry},
        {"distributive_max_length", bounds.distributive_max_length},
        {"distributive_max_entry", bounds.distributive_max_entry},
        {"binary_max", bounds.binary_max},
        {"reciprocal_entries", {bounds.reciprocal_min_entry, bounds.reciprocal_max_entry}},
        {"reciprocal_max_multiplier", bounds.reciprocal_max_multiplier},
    };

    const ListFamily family = build_family(bounds.distributive_max_length, bounds.distributive_max_entry);

    // Work items, in order: union suite per (length, first entry), the
    // distributive suite per representative, the binary suites per first
    // argument, and the reciprocal suite.
    const auto union_items = static_cast<std::size_t>(bounds.union_max_length) *
                             static_cast<std::size_t>(bounds.union_max_entry);
    const std::size_t family_items = family.members.size();
    const auto binary_items = static_cast<std::size_t>(bounds.binary_max);
    const std::size_t total_items = union_items + family_items + binary_items + 1;

    detail::Tally total(options.max_recorded);
    report.complete = detail::run_partitioned(total_items, options, total,
                                              [&](std::size_t item, detail::Tally& tally) {
        if (item < union_items) {
            const auto entries = static_cast<std::size_t>(bounds.union_max_entry);
            const int length = static_cast<int>(item / entries) + 1;
            const auto first = static_cast<std::int64_t>(item % entries) + 1;
            union_suite(first, length, bounds.union_max_entry, tally);
            return;
        }
        item -= union_items;
        if (item < family_items) {
            distributive_suite(family, item, tally);
            return;
        }
        item -= family_items;
        if (item < binary_items) {
            binary_suite(static_cast<std::int64_t>(item) + 1, bounds.binary_max, tally);
            return;
        }
        reciprocal_suite(bounds, tally);
    });
    std::move(total).finish(report);
    report.tallies["distributive.lists"] = family.lists;
    report.tallies["distributive.classes"] = family.members.size();
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

} // namespace ewci
