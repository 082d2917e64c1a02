// Command-line front end: single-instance inspection (check, profile,
// witness) and the exhaustive verification sweeps.
//
// Exit codes: 0 pass, 1 counterexample found, 2 input error, 3 overflow,
// 4 sweep interrupted before completion.

#include <atomic>
#include <chrono>
#include <csignal>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "ewci/json_io.hpp"
#include "ewci/nonvanish.hpp"
#include "ewci/verify.hpp"
#include "ewci/wci.hpp"

namespace {

using nlohmann::json;

enum ExitCode : int { kPass = 0, kCounterexample = 1, kInputError = 2, kOverflow = 3, kInterrupted = 4 };

volatile std::sig_atomic_t g_interrupted = 0;

extern "C" void on_sigint(int) { g_interrupted = 1; }

// Forwards SIGINT to a stop_source from an ordinary thread.
class InterruptWatcher {
public:
    InterruptWatcher()
    {
        std::signal(SIGINT, on_sigint);
        thread_ = std::jthread([this](std::stop_token own) {
            while (!own.stop_requested()) {
                if (g_interrupted) {
                    source_.request_stop();
                    return;
                }
                std::this_thread::sleep_for(std::chrono::milliseconds(50));
            }
        });
    }

    [[nodiscard]] std::stop_token token() const { return source_.get_token(); }

private:
    std::stop_source source_;
    std::jthread thread_;
};

struct CommonFlags {
    bool json = false;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
    std::uint64_t seed = 0x5eedULL;
};

void print_table(const std::vector<std::pair<std::string, std::string>>& rows)
{
    std::size_t width = 0;
    for (const auto& [k, v] : rows) width = std::max(width, k.size());
    for (const auto& [k, v] : rows) {
        std::cout << "  " << k << std::string(width - k.size() + 2, ' ') << v << "\n";
    }
}

std::string pairs_text(const std::vector<ewci::IndexPair>& pairs)
{
    std::string out = "{";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k != 0) out += ",";
        out += "{" + std::to_string(pairs[k].i) + "," + std::to_string(pairs[k].j) + "}";
    }
    return out + "}";
}

int report_exit(const ewci::VerificationReport& report, bool as_json)
{
    if (as_json) {
        std::cout << ewci::to_json(report).dump(2) << "\n";
    } else {
        std::vector<std::pair<std::string, std::string>> rows{
            {"suite", report.suite},
            {"bounds", report.bounds.dump()},
            {"instances checked", std::to_string(report.instances_checked)},
            {"counterexamples", std::to_string(report.counterexamples_total)},
            {"overflow cells", std::to_string(report.overflow_cells)},
            {"complete", report.complete ? "yes" : "no (interrupted)"},
            {"elapsed", std::to_string(report.elapsed_ms) + " ms"},
        };
        for (const auto& [k, v] : report.tallies) rows.emplace_back(k, std::to_string(v));
        for (const auto& [k, v] : report.failures) rows.emplace_back("FAILED " + k, std::to_string(v));
        std::cout << (report.passed() ? (report.vacuous() ? "PASS (vacuous: no instances matched)" : "PASS")
                                      : "FAIL")
                  << "\n";
        print_table(rows);
        for (const auto& c : report.counterexamples) std::cout << "  " << c.dump() << "\n";
    }
    if (report.counterexamples_total > 0) return kCounterexample;
    if (report.overflow_cells > 0) return kOverflow;
    if (!report.complete) return kInterrupted;
    return kPass;
}

int run_check(const std::vector<std::int64_t>& weights, std::int64_t d1, std::int64_t d2,
              std::int64_t h, const CommonFlags& flags)
{
    const ewci::WCIInstance inst(ewci::WeightSequence(weights), d1, d2);
    const auto report = ewci::validate_instance(inst, h);
    if (flags.json) {
        json out = ewci::to_json(report);
        out["instance"] = ewci::to_json(inst);
        out["h"] = h;
        out["canonical_degree"] = ewci::int_to_json(ewci::canonical_degree(inst));
        std::cout << out.dump(2) << "\n";
        return report.all_pass() ? kPass : kInputError;
    }
    std::cout << "instance " << ewci::to_string(inst.weights()) << " d=(" << d1 << "," << d2
              << ") h=" << h << "\n";
    for (const auto& c : report.checks) {
        std::string status = c.passed ? "pass" : (c.enforced ? "FAIL" : "warn");
        std::string failures;
        for (const auto& f : c.failures) {
            failures += " {";
            for (std::size_t k = 0; k < f.size(); ++k) failures += (k ? "," : "") + std::to_string(f[k]);
            failures += "}";
        }
        std::cout << "  " << status << "  " << c.name << "  " << c.detail << failures << "\n";
    }
    std::cout << (report.all_pass() ? "all hypotheses hold" : "hypotheses fail") << "\n";
    return report.all_pass() ? kPass : kInputError;
}

int run_profile(const std::vector<std::int64_t>& weights, int s, std::int64_t h, const CommonFlags& flags)
{
    const ewci::WeightSequence a(weights);
    const auto profile = ewci::compute_profile(a, s, h);
    const auto cert = ewci::search_certificate(a, h, profile);
    if (flags.json) {
        json out = {{"weights", ewci::to_json(a)}, {"h", h}, {"profile", ewci::to_json(profile)},
                    {"lhs", ewci::int_to_json(ewci::profile_lhs(a, profile))},
                    {"star_condition", ewci::star_condition(a, s)}};
        out["certificate"] = cert ? ewci::to_json(*cert) : json(nullptr);
        std::cout << out.dump(2) << "\n";
    } else {
        print_table({
            {"weights", ewci::to_string(a)},
            {"s", std::to_string(s)},
            {"h", std::to_string(h)},
            {"sigma1", pairs_text(profile.sigma1)},
            {"sigma2", pairs_text(profile.sigma2)},
            {"h1", ewci::to_string(profile.h1)},
            {"h2", ewci::to_string(profile.h2)},
            {"f1", ewci::to_string(profile.f1)},
            {"f2", ewci::to_string(profile.f2)},
            {"f1+f2-sum", ewci::to_string(ewci::profile_lhs(a, profile))},
            {"star condition", ewci::star_condition(a, s) ? "yes" : "no"},
        });
        if (cert) {
            std::string idx;
            for (auto i : cert->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
            std::cout << "certificate: " << ewci::to_string(cert->kind) << " (" << idx
                      << ") bound " << ewci::to_string(cert->bound) << "\n";
        } else {
            std::cout << "NO CERTIFICATE: counterexample cell\n";
        }
    }
    return cert ? kPass : kCounterexample;
}

int run_witness(const std::vector<std::int64_t>& weights, std::int64_t d1, std::int64_t d2,
                std::int64_t h, const CommonFlags& flags)
{
    const ewci::WCIInstance inst(ewci::WeightSequence(weights), d1, d2);
    try {
        const auto outcome = ewci::solve_section(inst, h);
        if (flags.json) {
            json out = ewci::to_json(outcome);
            out["instance"] = ewci::to_json(inst);
            out["h"] = h;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "witness " << ewci::to_string(outcome.witness) << " of degree " << h
                      << " via " << ewci::to_string(outcome.path) << "\n";
            if (outcome.certificate) {
                std::string idx;
                for (auto i : outcome.certificate->indices) idx += (idx.empty() ? "" : ",") + std::to_string(i);
                std::cout << "certificate " << ewci::to_string(outcome.certificate->kind) << " (" << idx
                          << ") on split s=" << outcome.split->s << "\n";
            }
        }
        return kPass;
    } catch (const ewci::Error& e) {
        if (e.kind() != ewci::ErrorKind::PreconditionViolated) throw;
        const auto report = ewci::validate_instance(inst, h);
        if (flags.json) {
            json out = {{"error", ewci::to_string(e.kind())}, {"message", e.what()},
                        {"validation", ewci::to_json(report)}};
            std::cout << out.dump(2) << "\n";
        } else {
            std::cerr << "error: " << e.what() << "\n";
        }
        return kInputError;
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Effective nonvanishing arithmetic for codimension-2 weighted complete intersections"};
    app.require_subcommand(1);

    CommonFlags flags;
    app.set_help_flag("--help", "Print this help message and exit");
    auto add_common = [&](CLI::App* sub, bool sweep) {
        sub->set_help_flag("--help", "Print this help message and exit");
        sub->add_flag("--json", flags.json, "Machine-readable JSON output");
        if (sweep) {
            sub->add_option("--jobs", flags.jobs, "Worker count")->check(CLI::Range(1U, 1024U));
            sub->add_option("--seed", flags.seed, "Seed for permutation spot-checks");
        }
    };

    std::vector<std::int64_t> weights;
    std::int64_t d1 = 0, d2 = 0, h = 0;
    int s = 0;

    auto* check = app.add_subcommand("check", "Validate an instance and report each hypothesis");
    check->add_option("--weights", weights, "Comma-separated weights")->delimiter(',')->required();
    check->add_option("--d1", d1)->required();
    check->add_option("--d2", d2)->required();
    check->add_option("--h", h)->required();
    add_common(check, false);

    auto* profile = app.add_subcommand("profile", "Split profile and certificate for one cell");
    profile->add_option("--weights", weights, "Comma-separated weights")->delimiter(',')->required();
    profile->add_option("--s", s)->required();
    profile->add_option("--h", h)->required();
    add_common(profile, false);

    auto* witness = app.add_subcommand("witness", "Produce a monomial section witness");
    witness->add_option("--weights", weights, "Comma-separated weights")->delimiter(',')->required();
    witness->add_option("--d1", d1)->required();
    witness->add_option("--d2", d2)->required();
    witness->add_option("--h", h)->required();
    add_common(witness, false);

    ewci::SweepBounds prop_bounds;
    std::int64_t h_cap = 0;
    prop_bounds.n_max = 4;
    prop_bounds.max_weight = 8;
    auto* verify_prop = app.add_subcommand("verify-prop", "Exhaustive certificate sweep");
    verify_prop->add_option("--n-min", prop_bounds.n_min)->capture_default_str();
    verify_prop->add_option("--n-max", prop_bounds.n_max)->capture_default_str();
    verify_prop->add_option("--max-weight", prop_bounds.max_weight)->capture_default_str();
    verify_prop->add_option("--h-cap", h_cap, "Use h in [1, N] instead of one period");
    add_common(verify_prop, true);

    ewci::FrobeniusBounds frob_bounds;
    auto* verify_frob = app.add_subcommand("verify-frobenius", "Coin-problem bound suites");
    verify_frob->add_option("--max-pair", frob_bounds.max_pair)->capture_default_str();
    verify_frob->add_option("--max-triple", frob_bounds.max_triple)->capture_default_str();
    add_common(verify_frob, true);

    ewci::SweepBounds thm_bounds;
    thm_bounds.n_max = 4;
    thm_bounds.max_weight = 10;
    thm_bounds.max_degree = 120;
    auto* verify_thm = app.add_subcommand("verify-theorem", "End-to-end witness pipeline sweep");
    verify_thm->add_option("--n-min", thm_bounds.n_min)->capture_default_str();
    verify_thm->add_option("--n-max", thm_bounds.n_max)->capture_default_str();
    verify_thm->add_option("--max-weight", thm_bounds.max_weight)->capture_default_str();
    verify_thm->add_option("--max-degree", thm_bounds.max_degree)->capture_default_str();
    add_common(verify_thm, true);

    ewci::LemmaBounds lemma_bounds;
    auto* verify_lem = app.add_subcommand("verify-lemmas", "gcd/lcm identity and inequality suites");
    verify_lem->add_option("--union-max-length", lemma_bounds.union_max_length)->capture_default_str();
    verify_lem->add_option("--union-max-entry", lemma_bounds.union_max_entry)->capture_default_str();
    verify_lem->add_option("--list-max-length", lemma_bounds.distributive_max_length)->capture_default_str();
    verify_lem->add_option("--list-max-entry", lemma_bounds.distributive_max_entry)->capture_default_str();
    verify_lem->add_option("--binary-max", lemma_bounds.binary_max)->capture_default_str();
    add_common(verify_lem, true);

    std::int64_t n2_max = 20;
    auto* verify_n2 = app.add_subcommand("verify-n2", "Failure shape for three-weight sequences");
    verify_n2->add_option("--max-entry", n2_max)->capture_default_str();
    add_common(verify_n2, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    }

    try {
        if (check->parsed()) return run_check(weights, d1, d2, h, flags);
        if (profile->parsed()) return run_profile(weights, s, h, flags);
        if (witness->parsed()) return run_witness(weights, d1, d2, h, flags);

        InterruptWatcher watcher;
        ewci::SweepOptions options;
        options.jobs = flags.jobs;
        options.seed = flags.seed;
        options.stop = watcher.token();

        if (verify_prop->parsed()) {
            if (h_cap != 0) prop_bounds.h_cap = h_cap;
            return report_exit(ewci::verify_proposition(prop_bounds, options), flags.json);
        }
        if (verify_frob->parsed()) return report_exit(ewci::verify_frobenius(frob_bounds, options), flags.json);
        if (verify_thm->parsed()) return report_exit(ewci::verify_theorem(thm_bounds, options), flags.json);
        if (verify_lem->parsed()) return report_exit(ewci::verify_lemmas(lemma_bounds, options), flags.json);
        if (verify_n2->parsed()) return report_exit(ewci::verify_two_variable(n2_max, options), flags.json);
    } catch (const ewci::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return kOverflow;
    } catch (const ewci::TheoremCounterexample& e) {
        std::cerr << "counterexample: " << e.what() << "\n";
        return kCounterexample;
    } catch (const ewci::Error& e) {
        std::cerr << "error (" << ewci::to_string(e.kind()) << "): " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
