#ifndef EWCI_SWEEP_DETAIL_HPP
#define EWCI_SWEEP_DETAIL_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ewci/verify.hpp"

namespace ewci::detail {

// Per-worker accumulator. Merging is associative and commutative: counts
// add up and the recorded counterexamples are the `limit` smallest by their
// serialized form, whichever worker found them.
class Tally {
public:
    explicit Tally(std::size_t limit) : limit_(limit) {}

    void add_instances(std::uint64_t count) noexcept { instances_ += count; }
    void add_overflow(nlohmann::json record);
    void count(const std::string& key, std::uint64_t by = 1) { counts_[key] += by; }
    void fail(const std::string& check, nlohmann::json record);

    void merge(Tally&& other);

    // Moves the accumulated state into `report` (sorted records).
    void finish(VerificationReport& report) &&;

private:
    void record(nlohmann::json record);
    void prune();

    std::size_t limit_;
    std::uint64_t instances_ = 0;
    std::uint64_t overflow_ = 0;
    std::uint64_t failures_total_ = 0;
    std::map<std::string, std::uint64_t> counts_;
    std::map<std::string, std::uint64_t> failures_;
    std::vector<std::pair<std::string, nlohmann::json>> records_;
};

// Runs work(item, tally) for every item in [0, count). Items are handed out
// one at a time to `options.jobs` workers; each worker owns a Tally and the
// tallies are merged after all workers finish. Returns false when the stop
// token fired before every item ran.
bool run_partitioned(std::size_t count, const SweepOptions& options, Tally& total,
                     const std::function<void(std::size_t, Tally&)>& work);

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    [[nodiscard]] std::int64_t elapsed_ms() const
    {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Mixes a base seed with an item index into an independent stream seed.
[[nodiscard]] std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) noexcept;

} // namespace ewci::detail

#endif // EWCI_SWEEP_DETAIL_HPP
