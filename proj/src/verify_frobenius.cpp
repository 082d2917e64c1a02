#include "ewci/semigroup.hpp"
#include "ewci/verify.hpp"
#include "sweep_detail.hpp"

namespace ewci {

namespace {

using nlohmann::json;

json cell(std::span<const std::int64_t> gens, std::int64_t h)
{
    return {{"generators", std::vector<std::int64_t>(gens.begin(), gens.end())}, {"h", h}};
}

// Soundness of the sufficiency bound and agreement of find_representation
// with the DP table, for every h in [1, 2 * lcm(gens)].
void check_system(std::span<const std::int64_t> gens, detail::Tally& tally)
{
    const CoinSystem sys(std::vector<std::int64_t>(gens.begin(), gens.end()));
    Int period = 1;
    for (auto g : gens) period = lcm(period, g);
    const auto h_max = static_cast<std::int64_t>(2 * period);
    const auto table = representable_up_to(gens, h_max);

    std::uint64_t guaranteed = 0;
    for (std::int64_t h = 1; h <= h_max; ++h) {
        const bool member = table[static_cast<std::size_t>(h)];
        if (guaranteed_representable(sys, h)) {
            ++guaranteed;
            if (!member) tally.fail("soundness", cell(gens, h));
        }
        const auto rep = find_representation(sys, h);
        if (rep.has_value() != member) {
            tally.fail("representation_agreement", cell(gens, h));
        } else if (rep) {
            Int total = 0;
            for (std::size_t k = 0; k < gens.size(); ++k) {
                if (rep->exponents[k] < 0) tally.fail("representation_sum", cell(gens, h));
                total += static_cast<Int>(rep->exponents[k]) * gens[k];
            }
            if (total != h) tally.fail("representation_sum", cell(gens, h));
        }
    }
    tally.add_instances(static_cast<std::uint64_t>(h_max));
    tally.count(gens.size() == 2 ? "pairs.guaranteed" : "triples.guaranteed", guaranteed);
}

} // namespace

VerificationReport verify_frobenius(const FrobeniusBounds& bounds, const SweepOptions& options)
{
    if (bounds.max_pair < 1 || bounds.max_triple < 1) {
        throw Error(ErrorKind::InvalidInput, "generator caps must be at least 1");
    }

    detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "frobenius";
    report.bounds = {{"max_pair", bounds.max_pair}, {"max_triple", bounds.max_triple},
                     {"h_rule", "twice_lcm"}};

    // Items: one per leading pair generator, then one per leading triple
    // generator. Ordered tuples throughout since the triple bound is not
    // symmetric.
    const auto pair_items = static_cast<std::size_t>(bounds.max_pair);
    const auto triple_items = static_cast<std::size_t>(bounds.max_triple);

    detail::Tally total(options.max_recorded);
    report.complete = detail::run_partitioned(
        pair_items + triple_items, options, total, [&](std::size_t item, detail::Tally& tally) {
            try {
                if (item < pair_items) {
                    const auto a0 = static_cast<std::int64_t>(item) + 1;
                    for (std::int64_t a1 = 1; a1 <= bounds.max_pair; ++a1) {
                        const std::array<std::int64_t, 2> gens{a0, a1};
                        check_system(gens, tally);
                        tally.count("pairs");
                        if (a0 >= 2 && a1 >= 2 && gcd(a0, a1) == 1) {
                            const std::int64_t frobenius = a0 * a1 - a0 - a1;
                            tally.count("sharpness");
                            if (representable_up_to(gens, frobenius).back()) {
                                tally.fail("sharpness", cell(gens, frobenius));
                            }
                        }
                    }
                } else {
                    const auto a0 = static_cast<std::int64_t>(item - pair_items) + 1;
                    for (std::int64_t a1 = 1; a1 <= bounds.max_triple; ++a1) {
                        for (std::int64_t a2 = 1; a2 <= bounds.max_triple; ++a2) {
                            const std::array<std::int64_t, 3> gens{a0, a1, a2};
                            check_system(gens, tally);
                            tally.count("triples");
                        }
                    }
                }
            } catch (const OverflowError& e) {
                tally.add_overflow({{"item", item}, {"error", e.what()}});
            }
        });
    std::move(total).finish(report);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

} // namespace ewci
