#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ewci/verify.hpp"
#include "sweep_detail.hpp"

namespace ewci {

namespace detail {

void Tally::add_overflow(nlohmann::json record)
{
    ++overflow_;
    record["check"] = "overflow";
    this->record(std::move(record));
}

void Tally::fail(const std::string& check, nlohmann::json record)
{
    ++failures_total_;
    ++failures_[check];
    record["check"] = check;
    this->record(std::move(record));
}

void Tally::record(nlohmann::json record)
{
    std::string key = record.dump();
    records_.emplace_back(std::move(key), std::move(record));
    if (records_.size() > 2 * limit_ + 16) prune();
}

void Tally::prune()
{
    std::sort(records_.begin(), records_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    records_.erase(std::unique(records_.begin(), records_.end(),
                               [](const auto& x, const auto& y) { return x.first == y.first; }),
                   records_.end());
    if (records_.size() > limit_) records_.resize(limit_);
}

void Tally::merge(Tally&& other)
{
    instances_ += other.instances_;
    overflow_ += other.overflow_;
    failures_total_ += other.failures_total_;
    for (const auto& [k, v] : other.counts_) counts_[k] += v;
    for (const auto& [k, v] : other.failures_) failures_[k] += v;
    for (auto& r : other.records_) records_.push_back(std::move(r));
    prune();
}

void Tally::finish(VerificationReport& report) &&
{
    prune();
    report.instances_checked += instances_;
    report.overflow_cells += overflow_;
    report.counterexamples_total += failures_total_;
    for (const auto& [k, v] : counts_) report.tallies[k] += v;
    for (const auto& [k, v] : failures_) report.failures[k] += v;
    for (auto& r : records_) report.counterexamples.push_back(std::move(r.second));
}

bool run_partitioned(std::size_t count, const SweepOptions& options, Tally& total,
                     const std::function<void(std::size_t, Tally&)>& work)
{
    const std::size_t limit = options.max_recorded;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> interrupted{false};
    std::mutex merge_mutex;

    auto worker = [&] {
        Tally local(limit);
        for (;;) {
            if (options.stop.stop_requested()) {
                interrupted = true;
                break;
            }
            const std::size_t item = next.fetch_add(1);
            if (item >= count) break;
            work(item, local);
        }
        std::lock_guard lock(merge_mutex);
        total.merge(std::move(local));
    };

    const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(count, 1));
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return !interrupted;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept
{
    // splitmix64 finalizer
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace detail

nlohmann::json SweepBounds::to_json() const
{
    nlohmann::json out = {
        {"n_min", n_min},
        {"n_max", n_max},
        {"max_weight", max_weight},
        {"h_rule", h_cap ? "cap" : "period"},
    };
    if (max_degree > 0) out["max_degree"] = max_degree;
    if (h_cap) out["h_cap"] = *h_cap;
    return out;
}

std::uint64_t VerificationReport::failures_for(const std::string& check) const
{
    const auto it = failures.find(check);
    return it == failures.end() ? 0 : it->second;
}

nlohmann::json to_json(const VerificationReport& report)
{
    return {
        {"suite", report.suite},
        {"bounds", report.bounds},
        {"instances_checked", report.instances_checked},
        {"counterexamples", report.counterexamples},
        {"counterexamples_total", report.counterexamples_total},
        {"failures", report.failures},
        {"overflow_cells", report.overflow_cells},
        {"tallies", report.tallies},
        {"complete", report.complete},
        {"vacuous", report.vacuous()},
        {"verdict", report.passed() ? (report.vacuous() ? "pass-vacuous" : "pass") : "fail"},
        {"elapsed_ms", report.elapsed_ms},
    };
}

SequenceStream::SequenceStream(const SweepBounds& bounds)
    : n_(bounds.n_min), n_max_(bounds.n_max), max_weight_(bounds.max_weight)
{
}

std::optional<WeightSequence> SequenceStream::next()
{
    if (max_weight_ < 1 || n_ < 0) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > n_max_) return std::nullopt;
        current_.assign(static_cast<std::size_t>(n_) + 1, 1);
        return WeightSequence(current_);
    }
    // Advance to the next nondecreasing tuple: bump the last entry that is
    // below the cap and reset everything after it to the same value.
    for (std::size_t k = current_.size(); k-- > 0;) {
        if (current_[k] < max_weight_) {
            const std::int64_t v = current_[k] + 1;
            std::fill(current_.begin() + static_cast<std::ptrdiff_t>(k), current_.end(), v);
            return WeightSequence(current_);
        }
    }
    ++n_;
    if (n_ > n_max_) return std::nullopt;
    current_.assign(static_cast<std::size_t>(n_) + 1, 1);
    return WeightSequence(current_);
}

std::vector<WeightSequence> enumerate_sequences(const SweepBounds& bounds)
{
    std::vector<WeightSequence> out;
    SequenceStream stream(bounds);
    while (auto a = stream.next()) out.push_back(std::move(*a));
    return out;
}

} // namespace ewci
