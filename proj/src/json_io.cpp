#include "ewci/json_io.hpp"

#include <limits>

namespace ewci {

using nlohmann::json;

json int_to_json(Int value)
{
    if (value >= std::numeric_limits<std::int64_t>::min() &&
        value <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(value);
    }
    return to_string(value);
}

json to_json(const WeightSequence& a)
{
    return json(std::vector<std::int64_t>(a.begin(), a.end()));
}

json to_json(const SplitProfile& profile)
{
    auto pairs = [](const std::vector<IndexPair>& list) {
        json out = json::array();
        for (const auto& p : list) out.push_back({p.i, p.j});
        return out;
    };
    return {
        {"s", profile.s},
        {"sigma1", pairs(profile.sigma1)},
        {"sigma2", pairs(profile.sigma2)},
        {"h1", int_to_json(profile.h1)},
        {"h2", int_to_json(profile.h2)},
        {"f1", int_to_json(profile.f1)},
        {"f2", int_to_json(profile.f2)},
    };
}

json to_json(const NonvanishingCertificate& cert)
{
    return {
        {"kind", to_string(cert.kind)},
        {"indices", cert.indices},
        {"bound", int_to_json(cert.bound)},
        {"lhs", int_to_json(cert.lhs)},
    };
}

json to_json(const SectionWitness& witness)
{
    json terms = json::array();
    for (const auto& [index, exponent] : witness.terms) {
        terms.push_back({{"variable", index}, {"exponent", exponent}});
    }
    return {{"degree", witness.degree}, {"terms", terms}, {"monomial", to_string(witness)}};
}

json to_json(const SplitChoice& split)
{
    return {{"order", split.order}, {"s", split.s}};
}

json to_json(const ValidationReport& report)
{
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({
            {"name", c.name},
            {"passed", c.passed},
            {"enforced", c.enforced},
            {"failures", c.failures},
            {"detail", c.detail},
        });
    }
    return {{"all_pass", report.all_pass()}, {"linear_cone", report.linear_cone}, {"checks", checks}};
}

json to_json(const WCIInstance& inst)
{
    return {{"weights", to_json(inst.weights())}, {"d1", inst.d1()}, {"d2", inst.d2()}};
}

json to_json(const WitnessOutcome& outcome)
{
    json out = {{"witness", to_json(outcome.witness)}, {"path", to_string(outcome.path)}};
    if (outcome.split) out["split"] = to_json(*outcome.split);
    if (outcome.profile) out["profile"] = to_json(*outcome.profile);
    if (outcome.certificate) out["certificate"] = to_json(*outcome.certificate);
    return out;
}

} // namespace ewci
