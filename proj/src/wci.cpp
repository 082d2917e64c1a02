#include "ewci/wci.hpp"

#include <algorithm>

#include "ewci/semigroup.hpp"

namespace ewci {

namespace {

std::string describe(const WCIInstance& inst, std::int64_t h)
{
    return "a=" + to_string(inst.weights()) + " d=(" + std::to_string(inst.d1()) + "," +
           std::to_string(inst.d2()) + ") h=" + std::to_string(h);
}

SectionWitness witness_from(std::span<const std::size_t> variables, const Representation& rep)
{
    SectionWitness w;
    w.degree = rep.value;
    for (std::size_t k = 0; k < variables.size(); ++k) {
        if (rep.exponents[k] > 0) w.terms[variables[k]] += rep.exponents[k];
    }
    return w;
}

} // namespace

WCIInstance::WCIInstance(WeightSequence weights, std::int64_t d1, std::int64_t d2)
    : weights_(std::move(weights)), d1_(d1), d2_(d2)
{
    if (weights_.n() < 3) {
        throw Error(ErrorKind::SequenceTooShort,
                    "a codimension-2 instance needs n >= 3, got n = " + std::to_string(weights_.n()));
    }
    if (d1_ < 1 || d2_ < 1) throw Error(ErrorKind::InvalidInput, "degrees must be positive");
}

bool WCIInstance::linear_cone() const noexcept
{
    return std::any_of(weights_.begin(), weights_.end(),
                       [&](std::int64_t w) { return w == d1_ || w == d2_; });
}

std::string to_string(const SectionWitness& witness)
{
    std::string out;
    for (const auto& [index, exponent] : witness.terms) {
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(index);
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out.empty() ? "1" : out;
}

Int witness_degree(const SectionWitness& witness, const WeightSequence& a)
{
    Int total = 0;
    for (const auto& [index, exponent] : witness.terms) {
        if (index >= a.size()) throw Error(ErrorKind::IndexOutOfRange, "witness variable out of range");
        total = checked_add(total, checked_mul(exponent, a[index]));
    }
    return total;
}

Int canonical_degree(const WCIInstance& inst)
{
    return checked_sub(checked_add(inst.d1(), inst.d2()), inst.weights().sum());
}

bool cartier_conditions(const WCIInstance& inst, std::int64_t h)
{
    const auto& a = inst.weights();
    const std::size_t count = a.size();
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const Int g = gcd_pair(a, i, j);
            if (!divides(g, h) && !(divides(g, inst.d1()) && divides(g, inst.d2()))) return false;
            for (std::size_t k = j + 1; k < count; ++k) {
                if (!divides(gcd(g, a[k]), h)) return false;
            }
        }
    }
    return true;
}

SplitChoice choose_split(const WCIInstance& inst, std::int64_t h)
{
    const auto& a = inst.weights();
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool to_d1 = inst.d1() % a[i] == 0;
        const bool to_d2 = inst.d2() % a[i] == 0;
        if (h % a[i] != 0 && !to_d1 && !to_d2) {
            throw SplitImpossible(i, "a_" + std::to_string(i) + "=" + std::to_string(a[i]) +
                                         " divides neither degree nor h (" + describe(inst, h) + ")");
        }
        (to_d1 ? first : second).push_back(i);
    }
    auto by_weight = [&](std::size_t x, std::size_t y) {
        return a[x] != a[y] ? a[x] < a[y] : x < y;
    };
    std::sort(first.begin(), first.end(), by_weight);
    std::sort(second.begin(), second.end(), by_weight);

    SplitChoice split;
    split.s = static_cast<int>(first.size()) - 1;
    split.order = std::move(first);
    split.order.insert(split.order.end(), second.begin(), second.end());
    return split;
}

std::vector<SplitChoice> all_splits(const WCIInstance& inst, std::int64_t h)
{
    const SplitChoice greedy = choose_split(inst, h);
    const auto& a = inst.weights();

    std::vector<std::size_t> flexible;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (h % a[i] != 0 && inst.d1() % a[i] == 0 && inst.d2() % a[i] == 0) flexible.push_back(i);
    }

    std::vector<SplitChoice> splits{greedy};
    auto by_weight = [&](std::size_t x, std::size_t y) {
        return a[x] != a[y] ? a[x] < a[y] : x < y;
    };
    const auto greedy_d1 = std::vector<std::size_t>(
        greedy.order.begin(), greedy.order.begin() + (greedy.s + 1));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << flexible.size()); ++mask) {
        std::vector<std::size_t> first, second;
        for (std::size_t i : greedy.order) {
            const auto pos = std::find(flexible.begin(), flexible.end(), i);
            const bool moved = pos != flexible.end() &&
                               ((mask >> static_cast<std::size_t>(pos - flexible.begin())) & 1U);
            const bool in_d1 = std::find(greedy_d1.begin(), greedy_d1.end(), i) != greedy_d1.end();
            (in_d1 && !moved ? first : second).push_back(i);
        }
        std::sort(first.begin(), first.end(), by_weight);
        std::sort(second.begin(), second.end(), by_weight);
        SplitChoice split;
        split.s = static_cast<int>(first.size()) - 1;
        split.order = std::move(first);
        split.order.insert(split.order.end(), second.begin(), second.end());
        splits.push_back(std::move(split));
    }
    return splits;
}

WeightSequence reorder(const WeightSequence& a, const SplitChoice& split)
{
    std::vector<std::int64_t> values;
    values.reserve(split.order.size());
    for (auto i : split.order) values.push_back(a[i]);
    return WeightSequence(std::move(values));
}

bool ValidationReport::all_pass() const noexcept
{
    return std::all_of(checks.begin(), checks.end(),
                       [](const HypothesisCheck& c) { return c.passed || !c.enforced; });
}

const HypothesisCheck* ValidationReport::find(std::string_view name) const noexcept
{
    for (const auto& c : checks) {
        if (c.name == name) return &c;
    }
    return nullptr;
}

ValidationReport validate_instance(const WCIInstance& inst, std::int64_t h)
{
    const auto& a = inst.weights();
    const std::size_t count = a.size();
    ValidationReport report;
    report.linear_cone = inst.linear_cone();

    HypothesisCheck positive{"positive_h", h >= 1, true, {}, "h must be a positive integer"};
    report.checks.push_back(positive);
    if (h < 1) return report;

    HypothesisCheck split{"degree_split", true, true, {},
                          "every a_i not dividing h divides d1 or d2"};
    for (std::size_t i = 0; i < count; ++i) {
        if (h % a[i] != 0 && inst.d1() % a[i] != 0 && inst.d2() % a[i] != 0) {
            split.failures.push_back({i});
        }
    }

    HypothesisCheck triples{"cartier_triples", true, true, {}, "a_I divides h for every |I| = 3"};
    HypothesisCheck pairs{"cartier_pairs", true, true, {},
                          "a_I not dividing h divides d1 and d2 for every |I| = 2"};
    for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t j = i + 1; j < count; ++j) {
            const Int g = gcd_pair(a, i, j);
            if (!divides(g, h) && !(divides(g, inst.d1()) && divides(g, inst.d2()))) {
                pairs.failures.push_back({i, j});
            }
            for (std::size_t k = j + 1; k < count; ++k) {
                if (!divides(gcd(g, a[k]), h)) triples.failures.push_back({i, j, k});
            }
        }
    }

    const Int canonical = canonical_degree(inst);
    HypothesisCheck amplitude{"amplitude", h > canonical, true, {},
                              "h > d1 + d2 - sum(a) = " + to_string(canonical)};

    HypothesisCheck cone{"not_linear_cone", !report.linear_cone, false, {},
                         "no degree equals a weight (reported only)"};
    for (std::size_t i = 0; i < count; ++i) {
        if (a[i] == inst.d1() || a[i] == inst.d2()) cone.failures.push_back({i});
    }

    HypothesisCheck ambient{"ambient_gcd", true, false, {},
                            "any n of the n+1 weights are coprime (reported only)"};
    for (std::size_t omit = 0; omit < count; ++omit) {
        Int g = 0;
        for (std::size_t i = 0; i < count; ++i) {
            if (i != omit) g = gcd(g, a[i]);
        }
        if (g != 1) ambient.failures.push_back({omit});
    }

    for (auto* check : {&split, &triples, &pairs, &cone, &ambient}) {
        check->passed = check->failures.empty();
    }
    cone.passed = !report.linear_cone;

    report.checks.push_back(std::move(split));
    report.checks.push_back(std::move(triples));
    report.checks.push_back(std::move(pairs));
    report.checks.push_back(std::move(amplitude));
    report.checks.push_back(std::move(cone));
    report.checks.push_back(std::move(ambient));
    return report;
}

std::string to_string(WitnessPath path)
{
    switch (path) {
    case WitnessPath::SingleVariable: return "single_variable";
    case WitnessPath::Certificate: return "certificate";
    case WitnessPath::AlternateSplitCertificate: return "alternate_split_certificate";
    case WitnessPath::ExhaustiveFallback: return "exhaustive_fallback";
    }
    return "unknown";
}

TheoremCounterexample::TheoremCounterexample(const WCIInstance& inst, std::int64_t h)
    : Error(ErrorKind::TheoremCounterexample, "no monomial of degree h for " + describe(inst, h)),
      instance_(inst), h_(h)
{
}

WitnessOutcome solve_section(const WCIInstance& inst, std::int64_t h)
{
    const ValidationReport report = validate_instance(inst, h);
    if (!report.all_pass()) {
        std::string failed;
        for (const auto& c : report.checks) {
            if (c.enforced && !c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
        }
        throw Error(ErrorKind::PreconditionViolated,
                    "hypotheses fail (" + failed + ") for " + describe(inst, h));
    }

    const auto& a = inst.weights();
    WitnessOutcome out;

    for (std::size_t i = 0; i < a.size(); ++i) {
        if (h % a[i] == 0) {
            out.witness.terms[i] = h / a[i];
            out.witness.degree = h;
            return out;
        }
    }

    bool first = true;
    for (const auto& split : all_splits(inst, h)) {
        const WeightSequence b = reorder(a, split);
        SplitProfile profile = compute_profile(b, split.s, h);
        const auto cert = search_certificate(b, h, profile);
        if (cert) {
            std::vector<std::int64_t> gens;
            std::vector<std::size_t> variables;
            for (auto k : cert->indices) {
                gens.push_back(b[k]);
                variables.push_back(split.order[k]);
            }
            if (auto rep = find_representation(CoinSystem(gens), h)) {
                out.witness = witness_from(variables, *rep);
                out.path = first ? WitnessPath::Certificate : WitnessPath::AlternateSplitCertificate;
                out.split = split;
                out.profile = std::move(profile);
                out.certificate = cert;
                return out;
            }
        }
        first = false;
    }

    // Exhaustive search over every variable set of size <= 3.
    const std::size_t count = a.size();
    std::vector<std::vector<std::size_t>> subsets;
    for (std::size_t i = 0; i < count; ++i) {
        subsets.push_back({i});
        for (std::size_t j = i + 1; j < count; ++j) {
            subsets.push_back({i, j});
            for (std::size_t k = j + 1; k < count; ++k) subsets.push_back({i, j, k});
        }
    }
    for (const auto& vars : subsets) {
        std::vector<std::int64_t> gens;
        for (auto v : vars) gens.push_back(a[v]);
        if (auto rep = find_representation(CoinSystem(gens), h)) {
            out.witness = witness_from(vars, *rep);
            out.path = WitnessPath::ExhaustiveFallback;
            return out;
        }
    }
    throw TheoremCounterexample(inst, h);
}

SectionWitness find_section_witness(const WCIInstance& inst, std::int64_t h)
{
    return solve_section(inst, h).witness;
}

} // namespace ewci
