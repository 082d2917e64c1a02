#include <algorithm>
#include <random>

#include "ewci/json_io.hpp"
#include "ewci/nonvanish.hpp"
#include "ewci/verify.hpp"
#include "sweep_detail.hpp"

namespace ewci {

namespace {

using nlohmann::json;

void require(bool ok, const std::string& what)
{
    if (!ok) throw Error(ErrorKind::InvalidInput, what);
}

json cell(const WeightSequence& a, int s, std::int64_t h)
{
    return {{"weights", to_json(a)}, {"s", s}, {"h", h}};
}

json cell(const WeightSequence& a, std::int64_t h, const SplitProfile& profile)
{
    json out = cell(a, profile.s, h);
    out["profile"] = to_json(profile);
    return out;
}

std::int64_t sequence_lcm(const WeightSequence& a)
{
    Int l = 1;
    for (auto w : a) l = lcm(l, w);
    if (l > std::numeric_limits<std::int64_t>::max()) throw OverflowError("period exceeds 64 bits");
    return static_cast<std::int64_t>(l);
}

bool certificate_exists(const WeightSequence& a, int s, std::int64_t h)
{
    return search_certificate(a, h, evaluate_profile(a, s, h)).has_value();
}

void sweep_sequence(const WeightSequence& a, const SweepBounds& bounds, std::uint64_t seed,
                    detail::Tally& tally)
{
    const int n = static_cast<int>(a.n());
    const WeightSequence reversed = a.reversed();

    std::vector<std::int64_t> shuffled(a.begin(), a.end());
    std::mt19937_64 rng(seed);
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const WeightSequence permuted(std::move(shuffled));

    const std::int64_t period = sequence_lcm(a);
    const std::int64_t h_max = bounds.h_cap ? *bounds.h_cap : period;

    std::vector<SplitProfile> profiles(static_cast<std::size_t>(n) + 2);
    std::vector<bool> exists(static_cast<std::size_t>(n) + 2);
    std::uint64_t cells = 0;
    std::uint64_t couples = 0;
    std::uint64_t triples = 0;

    for (std::int64_t h = 1; h <= h_max; ++h) {
        try {
            if (!hypotheses_hold(a, h)) continue;
            for (int s = -1; s <= n; ++s) {
                const auto slot = static_cast<std::size_t>(s + 1);
                profiles[slot] = evaluate_profile(a, s, h);
                const auto cert = search_certificate(a, h, profiles[slot]);
                exists[slot] = cert.has_value();
                ++cells;
                if (!cert) {
                    tally.fail("certificate", cell(a, h, profiles[slot]));
                } else if (cert->kind == CertificateKind::Couple) {
                    ++couples;
                } else {
                    ++triples;
                }
            }

            for (int s = 0; s <= n; ++s) {
                const auto& here = profiles[static_cast<std::size_t>(s + 1)];
                const auto& prev = profiles[static_cast<std::size_t>(s)];
                if (here.f1 < prev.f1) {
                    json r = cell(a, h, here);
                    r["previous"] = to_json(prev);
                    tally.fail("monotone_f1", std::move(r));
                }
                if (divides(a[static_cast<std::size_t>(s)], here.f2) && here.f2 < prev.f2) {
                    json r = cell(a, h, here);
                    r["previous"] = to_json(prev);
                    tally.fail("monotone_f2", std::move(r));
                }
            }

            for (int s = -1; s <= n; ++s) {
                const bool mirrored = certificate_exists(reversed, n - 1 - s, h);
                if (mirrored != exists[static_cast<std::size_t>(s + 1)]) {
                    json r = cell(a, s, h);
                    r["reversed_split"] = n - 1 - s;
                    tally.fail("reversal_symmetry", std::move(r));
                }
                if (!certificate_exists(permuted, s, h)) {
                    tally.fail("permutation", cell(permuted, s, h));
                }
            }
        } catch (const OverflowError& e) {
            json r = cell(a, -1, h);
            r["error"] = e.what();
            tally.add_overflow(std::move(r));
        }
    }
    tally.add_instances(cells);
    tally.count("certificate.couple", couples);
    tally.count("certificate.triple", triples);
    tally.count("sequences");
}

} // namespace

VerificationReport verify_proposition(const SweepBounds& bounds, const SweepOptions& options)
{
    require(bounds.max_weight >= 1, "max_weight must be at least 1");
    require(bounds.n_min >= 3, "the proposition needs n >= 3");
    require(bounds.n_min <= bounds.n_max, "n range is empty");
    require(!bounds.h_cap || *bounds.h_cap >= 1, "h cap must be at least 1");

    detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "proposition";
    report.bounds = bounds.to_json();

    const auto sequences = enumerate_sequences(bounds);
    detail::Tally total(options.max_recorded);
    report.complete = detail::run_partitioned(
        sequences.size(), options, total, [&](std::size_t item, detail::Tally& tally) {
            try {
                sweep_sequence(sequences[item], bounds, detail::mix_seed(options.seed, item), tally);
            } catch (const OverflowError& e) {
                tally.add_overflow({{"weights", to_json(sequences[item])}, {"error", e.what()}});
            }
        });
    std::move(total).finish(report);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

VerificationReport verify_two_variable(std::int64_t max_entry, const SweepOptions& options)
{
    require(max_entry >= 1, "max_entry must be at least 1");

    detail::Stopwatch clock;
    VerificationReport report;
    report.suite = "two-variable";
    report.bounds = {{"n", 2}, {"max_entry", max_entry}, {"h_rule", "period"}};

    // One item per leading entry; all ordered triples are visited because the
    // split makes the position of each weight matter.
    detail::Tally total(options.max_recorded);
    report.complete = detail::run_partitioned(
        static_cast<std::size_t>(max_entry), options, total,
        [&](std::size_t item, detail::Tally& tally) {
            const auto a0 = static_cast<std::int64_t>(item) + 1;
            std::uint64_t cells = 0;
            std::uint64_t failures = 0;
            for (std::int64_t a1 = 1; a1 <= max_entry; ++a1) {
                for (std::int64_t a2 = 1; a2 <= max_entry; ++a2) {
                    const WeightSequence a{a0, a1, a2};
                    const std::int64_t period = sequence_lcm(a);
                    const std::array<IndexPair, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
                    for (std::int64_t h = 1; h <= period; ++h) {
                        if (!hypotheses_hold_any_length(a, h)) continue;
                        for (int s = -1; s <= 2; ++s) {
                            ++cells;
                            const SplitProfile profile = evaluate_profile(a, s, h);
                            if (search_certificate(a, h, profile)) continue;
                            ++failures;

                            std::vector<IndexPair> non_dividing;
                            for (const auto& p : pairs) {
                                if (!divides(gcd_pair(a, p.i, p.j), h)) non_dividing.push_back(p);
                            }
                            const bool split_ok = s == -1 || s == 2;
                            const bool unique_pair = non_dividing.size() == 1;
                            bool covered = unique_pair;
                            if (unique_pair) {
                                for (auto i : {non_dividing[0].i, non_dividing[0].j}) {
                                    Int others = 1;
                                    for (std::size_t j = 0; j < 3; ++j) {
                                        if (j != i) others = lcm(others, a[j]);
                                    }
                                    covered = covered && divides(a[i], others);
                                }
                            }
                            if (!(split_ok && unique_pair && covered)) {
                                json r = cell(a, h, profile);
                                r["split_condition"] = split_ok;
                                r["unique_pair_condition"] = unique_pair;
                                r["lcm_condition"] = covered;
                                tally.fail("failure_shape", std::move(r));
                            }
                        }
                    }
                }
            }
            tally.add_instances(cells);
            tally.count("certificate_failures", failures);
        });
    std::move(total).finish(report);
    report.elapsed_ms = clock.elapsed_ms();
    return report;
}

} // namespace ewci
