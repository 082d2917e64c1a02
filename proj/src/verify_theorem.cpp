#include <algorithm>
#include <limits>
#include <unordered_map>

#include "ewci/json_io.hpp"
#include "ewci/semigroup.hpp"
#include "ewci/verify.hpp"
#include "ewci/wci.hpp"
#include "sweep_detail.hpp"

namespace ewci {

namespace {

using nlohmann::json;

// Degrees d in [1, max_degree] that are multiples of a fixed modulus,
// grouped by which weights divide them. Everything the pipeline does with a
// degree goes through these divisibility tests, so one instance per class
// pair and h stands for every degree pair in it.
struct DegreeClasses {
    std::vector<unsigned> masks;
    std::vector<std::vector<std::int64_t>> members;  // sorted ascending
    std::vector<std::int64_t> member_gcd;
    // sum_counts[c1 * C + c2][t] = #{(d1, d2) in class c1 x class c2 : d1 + d2 <= t}
    std::vector<std::vector<std::uint64_t>> sum_counts;
};

DegreeClasses build_classes(std::int64_t modulus, std::int64_t max_degree,
                            const std::vector<unsigned>& mask_of)
{
    DegreeClasses dc;
    for (std::int64_t d = modulus; d <= max_degree; d += modulus) {
        const unsigned m = mask_of[static_cast<std::size_t>(d)];
        auto it = std::find(dc.masks.begin(), dc.masks.end(), m);
        std::size_t c = static_cast<std::size_t>(it - dc.masks.begin());
        if (it == dc.masks.end()) {
            dc.masks.push_back(m);
            dc.members.emplace_back();
            dc.member_gcd.push_back(0);
        }
        dc.members[c].push_back(d);
        dc.member_gcd[c] = static_cast<std::int64_t>(gcd(dc.member_gcd[c], d));
    }
    const std::size_t classes = dc.masks.size();
    const auto top = static_cast<std::size_t>(2 * max_degree);
    dc.sum_counts.assign(classes * classes, {});
    for (std::size_t c1 = 0; c1 < classes; ++c1) {
        for (std::size_t c2 = 0; c2 < classes; ++c2) {
            auto& counts = dc.sum_counts[c1 * classes + c2];
            counts.assign(top + 1, 0);
            for (auto x : dc.members[c1]) {
                for (auto y : dc.members[c2]) ++counts[static_cast<std::size_t>(x + y)];
            }
            for (std::size_t t = 1; t <= top; ++t) counts[t] += counts[t - 1];
        }
    }
    return dc;
}

std::uint64_t pairs_with_sum_in(const std::vector<std::uint64_t>& prefix, std::int64_t lo,
                                std::int64_t hi)
{
    const auto top = static_cast<std::int64_t>(prefix.size()) - 1;
    hi = std::min(hi, top);
    if (hi < lo) return 0;
    const std::uint64_t below = lo >= 1 ? prefix[static_cast<std::size_t>(lo - 1)] : 0;
    return prefix[static_cast<std::size_t>(hi)] - below;
}

// Some (d1, d2) from the two classes with lo <= d1 + d2 <= hi.
std::pair<std::int64_t, std::int64_t> representative(const std::vector<std::int64_t>& first,
                                                     const std::vector<std::int64_t>& second,
                                                     std::int64_t lo, std::int64_t hi)
{
    for (auto d1 : first) {
        auto it = std::lower_bound(second.begin(), second.end(), lo - d1);
        if (it != second.end() && d1 + *it <= hi) return {d1, *it};
    }
    throw Error(ErrorKind::InvalidInput, "no degree pair in the requested window");
}

json cell(const WeightSequence& a, std::int64_t d1, std::int64_t d2, std::int64_t h)
{
    return {{"weights", to_json(a)}, {"d1", d1}, {"d2", d2}, {"h", h}};
}

struct SequenceContext {
    const WeightSequence& a;
    std::int64_t max_degree;
    std::int64_t sum;
    std::int64_t period;
    std::int64_t h_max;
    std::vector<char> oracle;
    std::vector<unsigned> mask_of;
    std::vector<std::int64_t> pair_gcds;
    std::vector<std::int64_t> triple_gcds;
    std::vector<std::pair<std::size_t, std::size_t>> pair_index;
};

// Union of DP membership tables over every variable set of size <= 3.
std::vector<char> subset_oracle(const WeightSequence& a, std::int64_t limit)
{
    std::vector<char> reach(static_cast<std::size_t>(limit) + 1, 0);
    const std::size_t m = a.size();
    auto merge = [&](std::vector<std::int64_t> gens) {
        const auto table = representable_up_to(gens, limit);
        for (std::size_t v = 0; v < table.size(); ++v) {
            if (table[v]) reach[v] = 1;
        }
    };
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t k = j + 1; k < m; ++k) merge({a[i], a[j], a[k]});
        }
    }
    // Subsets of size one and two are contained in some triple when m >= 3.
    if (m < 3) {
        for (std::size_t i = 0; i < m; ++i) {
            merge({a[i]});
            for (std::size_t j = i + 1; j < m; ++j) merge({a[i], a[j]});
        }
    }
    return reach;
}

void check_outcome(const SequenceContext& ctx, const DegreeClasses& dc, std::size_t c1,
                   std::size_t c2, std::int64_t d1, std::int64_t d2, std::int64_t h,
                   std::uint64_t weight, detail::Tally& tally)
{
    const WCIInstance inst(ctx.a, d1, d2);
    const bool oracle = ctx.oracle[static_cast<std::size_t>(h)] != 0;
    WitnessOutcome outcome;
    try {
        outcome = solve_section(inst, h);
    } catch (const TheoremCounterexample&) {
        json r = cell(ctx.a, d1, d2, h);
        r["oracle_representable"] = oracle;
        tally.fail(oracle ? "oracle_agreement" : "theorem", std::move(r));
        return;
    }
    tally.count("path." + to_string(outcome.path), weight);

    const auto& w = outcome.witness;
    if (w.degree != h || w.terms.size() > 3 || witness_degree(w, ctx.a) != h ||
        std::any_of(w.terms.begin(), w.terms.end(), [](const auto& t) { return t.second <= 0; })) {
        json r = cell(ctx.a, d1, d2, h);
        r["witness"] = to_json(w);
        tally.fail("witness_degree", std::move(r));
    }
    if (!oracle) {
        json r = cell(ctx.a, d1, d2, h);
        r["witness"] = to_json(w);
        tally.fail("oracle_agreement", std::move(r));
    }
    if (outcome.path == WitnessPath::AlternateSplitCertificate ||
        outcome.path == WitnessPath::ExhaustiveFallback) {
        json r = cell(ctx.a, d1, d2, h);
        r["outcome"] = to_json(outcome);
        tally.fail("certificate_path", std::move(r));
    }
    if (outcome.profile) {
        // f1 | d1 and f2 | d2 for every degree in the two classes.
        if (!divides(outcome.profile->f1, dc.member_gcd[c1]) ||
            !divides(outcome.profile->f2, dc.member_gcd[c2])) {
            json r = cell(ctx.a, d1, d2, h);
            r["outcome"] = to_json(outcome);
            tally.fail("divisibility_chain", std::move(r));
        }
    }
}

void sweep_sequence(const WeightSequence& a, std::int64_t max_degree, detail::Tally& tally)
{
    const std::size_t m = a.size();
    Int period = 1;
    for (auto w : a) period = lcm(period, w);
    if (period > std::numeric_limits<std::int32_t>::max()) throw OverflowError("period too large for a sweep");

    SequenceContext ctx{a, max_degree, static_cast<std::int64_t>(a.sum()),
                        static_cast<std::int64_t>(period), 0, {}, {}, {}, {}, {}};
    ctx.h_max = std::max<std::int64_t>(0, 2 * max_degree - ctx.sum) + ctx.period;
    ctx.oracle = subset_oracle(a, ctx.h_max);

    ctx.mask_of.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::int64_t d = 1; d <= max_degree; ++d) {
        unsigned mask = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (d % a[i] == 0) mask |= 1U << i;
        }
        ctx.mask_of[static_cast<std::size_t>(d)] = mask;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            ctx.pair_gcds.push_back(static_cast<std::int64_t>(gcd(a[i], a[j])));
            ctx.pair_index.emplace_back(i, j);
            for (std::size_t k = j + 1; k < m; ++k) {
                ctx.triple_gcds.push_back(static_cast<std::int64_t>(gcd_triple(a, i, j, k)));
            }
        }
    }

    std::unordered_map<std::int64_t, DegreeClasses> classes_by_modulus;
    std::uint64_t instances = 0;

    for (std::int64_t h = 1; h <= ctx.h_max; ++h) {
        if (std::any_of(ctx.triple_gcds.begin(), ctx.triple_gcds.end(),
                        [h](std::int64_t g) { return h % g != 0; })) {
            continue;
        }
        // Pair gcds not dividing h must divide both degrees.
        std::int64_t modulus = 1;
        for (auto g : ctx.pair_gcds) {
            if (h % g != 0) modulus = static_cast<std::int64_t>(lcm(modulus, g));
        }
        if (modulus > max_degree) continue;
        unsigned must_cover = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (h % a[i] != 0) must_cover |= 1U << i;
        }

        auto [it, inserted] = classes_by_modulus.try_emplace(modulus);
        if (inserted) it->second = build_classes(modulus, max_degree, ctx.mask_of);
        const DegreeClasses& dc = it->second;

        // Degree sums whose window (K', K' + period] contains h, where
        // K' = max(0, d1 + d2 - sum(a)). Every sum up to sum(a) has K' = 0.
        const std::int64_t lo =
            h <= ctx.period ? 2 : std::max<std::int64_t>(2, h + ctx.sum - ctx.period);
        const std::int64_t hi = h + ctx.sum - 1;

        const std::size_t count = dc.masks.size();
        for (std::size_t c1 = 0; c1 < count; ++c1) {
            for (std::size_t c2 = 0; c2 < count; ++c2) {
                if (((dc.masks[c1] | dc.masks[c2]) & must_cover) != must_cover) continue;
                const std::uint64_t pairs = pairs_with_sum_in(dc.sum_counts[c1 * count + c2], lo, hi);
                if (pairs == 0) continue;
                instances += pairs;
                const auto [d1, d2] = representative(dc.members[c1], dc.members[c2], lo, hi);
                check_outcome(ctx, dc, c1, c2, d1, d2, h, pairs, tally);
                tally.count("evaluations");
            }
        }
    }
    tally.add_instances(instances);
    tally.count("sequences");
}

} // namespace

VerificationReport verify_theorem(const SweepBounds& bounds, const SweepOptions& options)
{
    if (bounds.max_weight < 1) throw Error(ErrorKind::InvalidInput, "max_weight must be at least 1");
    if (bounds.max_degree < 1) throw Error(ErrorKind::InvalidInput, "max_degree must be at least 1");
    if (bounds.n_min < 3) throw Error(ErrorKind::InvalidInput, "instances need n >= 3");
    if (bounds.n_max > 30) throw Error(ErrorKind::InvalidInput, "n is capped at 30");
    if (bounds.n_min > bounds.n_max) throw Error(ErrorKind::InvalidInput, "n range is empty");
    if (bounds.h_cap) throw Error(ErrorKind::InvalidInput, "the theorem sweep always uses one period");

    detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "theorem";
    report.bounds = bounds.to_json();
    report.bounds["h_rule"] = "period_above_threshold";

    const auto sequences = enumerate_sequences(bounds);
    detail::Tally total(options.max_recorded);
    report.complete = detail::run_partitioned(
        sequences.size(), options, total, [&](std::size_t item, detail::Tally& tally) {
            try {
                sweep_sequence(sequences[item], bounds.max_degree, tally);
            } catch (const OverflowError& e) {
                tally.add_overflow({{"weights", to_json(sequences[item])}, {"error", e.what()}});
            }
        });
    std::move(total).finish(report);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

} // namespace ewci
