#include "ewci/nonvanish.hpp"

#include <string>

#include "ewci/semigroup.hpp"

namespace ewci {

namespace {

void require_split_in_range(const WeightSequence& a, int s)
{
    if (s < -1 || s > static_cast<int>(a.n())) {
        throw Error(ErrorKind::SplitOutOfRange,
                    "split " + std::to_string(s) + " outside [-1, " + std::to_string(a.n()) + "]");
    }
}

void require_positive_h(std::int64_t h)
{
    if (h < 1) throw Error(ErrorKind::InvalidInput, "h must be positive, got " + std::to_string(h));
}

std::string describe_cell(const WeightSequence& a, std::int64_t h, const SplitProfile& profile)
{
    return "no certificate for a=" + to_string(a) + " s=" + std::to_string(profile.s) +
           " h=" + std::to_string(h) + " f1=" + to_string(profile.f1) +
           " f2=" + to_string(profile.f2);
}

} // namespace

std::string to_string(CertificateKind kind)
{
    return kind == CertificateKind::Couple ? "couple" : "triple";
}

CounterexampleFound::CounterexampleFound(WeightSequence a, std::int64_t h, SplitProfile profile)
    : Error(ErrorKind::CounterexampleFound, describe_cell(a, h, profile)),
      weights_(std::move(a)), h_(h), profile_(std::move(profile))
{
}

bool hypotheses_hold_any_length(const WeightSequence& a, std::int64_t h)
{
    require_positive_h(h);
    const std::size_t count = a.size();
    for (std::size_t i = 0; i < count; ++i) {
        if (h % a[i] == 0) return false;
    }
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const Int g = gcd_pair(a, i, j);
            for (std::size_t k = j + 1; k < count; ++k) {
                if (!divides(gcd(g, a[k]), h)) return false;
            }
        }
    }
    return true;
}

bool hypotheses_hold(const WeightSequence& a, std::int64_t h)
{
    if (a.n() < 3) {
        throw Error(ErrorKind::SequenceTooShort,
                    "need n >= 3, got n = " + std::to_string(a.n()));
    }
    return hypotheses_hold_any_length(a, h);
}

SplitProfile evaluate_profile(const WeightSequence& a, int s, std::int64_t h)
{
    require_split_in_range(a, s);
    require_positive_h(h);

    SplitProfile p;
    p.s = s;
    const auto n = static_cast<int>(a.n());
    for (int i = 0; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Int g = gcd_pair(a, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (divides(g, h)) continue;
            const IndexPair pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
            if (i > s) {
                p.sigma1.push_back(pair);
                p.h1 = lcm(p.h1, g);
            } else if (j <= s) {
                p.sigma2.push_back(pair);
                p.h2 = lcm(p.h2, g);
            }
        }
    }
    p.f1 = p.h1;
    for (int j = 0; j <= s; ++j) p.f1 = lcm(p.f1, a[static_cast<std::size_t>(j)]);
    p.f2 = p.h2;
    for (int j = s + 1; j <= n; ++j) p.f2 = lcm(p.f2, a[static_cast<std::size_t>(j)]);
    return p;
}

SplitProfile compute_profile(const WeightSequence& a, int s, std::int64_t h)
{
    require_split_in_range(a, s);
    if (!hypotheses_hold(a, h)) {
        throw Error(ErrorKind::HypothesesViolated,
                    "hypotheses fail for a=" + to_string(a) + " h=" + std::to_string(h));
    }
    return evaluate_profile(a, s, h);
}

Int profile_lhs(const WeightSequence& a, const SplitProfile& profile)
{
    return checked_sub(checked_add(profile.f1, profile.f2), a.sum());
}

std::optional<NonvanishingCertificate>
search_certificate(const WeightSequence& a, std::int64_t h, const SplitProfile& profile)
{
    const Int lhs = profile_lhs(a, profile);
    const std::size_t count = a.size();

    for (std::size_t u = 0; u < count; ++u) {
        for (std::size_t v = u + 1; v < count; ++v) {
            if (!divides(gcd_pair(a, u, v), h)) continue;
            const Int bound = frobenius_bound_two(a[u], a[v]);
            if (lhs >= bound) {
                return NonvanishingCertificate{CertificateKind::Couple, {u, v}, bound, lhs};
            }
        }
    }

    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            for (std::size_t k = j + 1; k < count; ++k) {
                const std::array<std::array<std::size_t, 3>, 3> roles{{
                    {i, j, k},
                    {i, k, j},
                    {j, k, i},
                }};
                for (const auto& [u, v, w] : roles) {
                    const Int bound = frobenius_bound_three(a[u], a[v], a[w]);
                    if (lhs >= bound) {
                        return NonvanishingCertificate{CertificateKind::Triple, {u, v, w}, bound, lhs};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

NonvanishingCertificate find_certificate(const WeightSequence& a, int s, std::int64_t h)
{
    SplitProfile profile = compute_profile(a, s, h);
    if (auto cert = search_certificate(a, h, profile)) return *cert;
    throw CounterexampleFound(a, h, std::move(profile));
}

bool star_condition(const WeightSequence& a, int s)
{
    require_split_in_range(a, s);
    const auto n = static_cast<int>(a.n());
    auto side_is_antichain = [&](int lo, int hi) {
        for (int i = lo; i <= hi; ++i) {
            for (int j = i + 1; j <= hi; ++j) {
                const auto x = a[static_cast<std::size_t>(i)];
                const auto y = a[static_cast<std::size_t>(j)];
                if (y % x == 0 || x % y == 0) return false;
            }
        }
        return true;
    };
    return side_is_antichain(0, s) && side_is_antichain(s + 1, n);
}

} // namespace ewci
