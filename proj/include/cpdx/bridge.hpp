#pragma once

#include <cstdint>
#include <vector>

#include "cpdx/series.hpp"
#include "cpdx/statistics.hpp"

namespace cpdx {

// Monte Carlo sample of M = max_{a <= t <= b} |B0(t)| / (t(1-t))^(1-delta)
// for a standard Brownian bridge B0 on a uniform grid. Samples sorted
// ascending.
struct BridgeNull {
    double delta = 1.0;
    double a = 0.0;
    double b = 1.0;
    long grid_size = 0;
    long mc_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> samples;

    double upper_tail_pvalue(double observed) const;
    double upper_quantile(double prob) const;  // e.g. 0.9 for the 0.9-quantile
};

inline constexpr long kDefaultBridgeGrid = 1000;
inline constexpr long kDefaultBridgeMcCount = 100000;

// Each draw builds the bridge from cumulative Gaussian steps pinned at the
// endpoint, then maximizes the weighted absolute path over grid points
// inside [a, b]. Draws use per-index derived generators and may run on
// several threads without changing the result.
BridgeNull simulate_bridge_null(double delta, double a, double b, long grid_size, long mc_count,
                                std::uint64_t seed, int n_threads = 0);

// Scan window matching the exact tests' full integer scan.
inline void full_scan_window(long T, double* a, double* b) {
    *a = 1.0 / static_cast<double>(T);
    *b = static_cast<double>(T - 1) / static_cast<double>(T);
}

// Large-sample CUSUM test: sqrt(T) * cusum / sigma_hat against the bridge
// null, where sigma_hat is sqrt(pi_hat(1-pi_hat)) for binary series and
// sqrt(lambda_hat) for counts. Degenerate series (sigma_hat = 0) never
// reject.
TestOutcome asymptotic_cusum_test(const ChannelSeries& series, double delta, double alpha,
                                  const BridgeNull& null);

}  // namespace cpdx
