#pragma once

#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "cpdx/bridge.hpp"
#include "cpdx/exact.hpp"
#include "cpdx/statistics.hpp"

namespace cpdx {

// Shared store of Monte Carlo null calibrations, bridge nulls and
// conditional pmf tables. Lookups are keyed by everything that determines
// the content, so a hit is byte-identical to a recomputation. Concurrent
// readers are fine; the first caller of a missing key computes it while
// later callers of the same key wait.
//
// Persistence: a versioned text table ("cpdx-null-cache 1"). Each entry is
// a header line followed by one line of %.17g samples, so files round-trip
// doubles exactly:
//   calibration <statistic_id> <kind> <T> <s_total> <mc_count> <seed>
//   bridge <delta> <a> <b> <grid_size> <mc_count> <seed>
// pmf tables are cheap and are never persisted.
class CalibrationStore {
public:
    const NullCalibration& calibration(const StatisticId& statistic, Kind kind, long T,
                                       long s_total, long mc_count, std::uint64_t seed);

    const ConditionalPValueTable& pvalue_table(Kind kind, long T, long s_total);

    const BridgeNull& bridge(double delta, double a, double b, long grid_size, long mc_count,
                             std::uint64_t seed, int n_threads = 0);

    // Writes all completed entries, sorted by key. Throws on I/O failure.
    void save(const std::string& path) const;

    // Merges entries from a cache file; keys already present are kept.
    // Returns the number of entries added. Throws std::runtime_error on a
    // malformed file.
    long load(const std::string& path);

    long entry_count() const;

private:
    template <typename V>
    struct Slot {
        std::promise<void> ready;
        std::shared_future<void> done;
        std::optional<V> value;
    };

    template <typename V, typename Compute>
    const V& get_or_compute(std::map<std::string, std::shared_ptr<Slot<V>>>& slots,
                            const std::string& key, Compute&& compute);

    mutable std::mutex mutex_;
    std::map<std::string, std::shared_ptr<Slot<NullCalibration>>> calibrations_;
    std::map<std::string, std::shared_ptr<Slot<BridgeNull>>> bridges_;
    std::map<std::string, std::shared_ptr<Slot<ConditionalPValueTable>>> tables_;
};

}  // namespace cpdx
