#include "cpdx/bridge.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cpdx/parallel.hpp"
#include "cpdx/rng.hpp"

namespace cpdx {

double BridgeNull::upper_tail_pvalue(double observed) const {
    const auto it = std::lower_bound(samples.begin(), samples.end(), observed);
    const long count_ge = static_cast<long>(samples.end() - it);
    return static_cast<double>(1 + count_ge) / static_cast<double>(mc_count + 1);
}

double BridgeNull::upper_quantile(double prob) const {
    long rank = static_cast<long>(std::ceil(prob * static_cast<double>(mc_count)));
    rank = std::max<long>(1, std::min(rank, mc_count));
    return samples[static_cast<std::size_t>(rank - 1)];
}

BridgeNull simulate_bridge_null(double delta, double a, double b, long grid_size, long mc_count,
                                std::uint64_t seed, int n_threads) {
    if (!(0.0 < a && a < b && b < 1.0))
        throw std::invalid_argument("bridge window needs 0 < a < b < 1");
    if (delta < 0.0 || delta > 1.0) throw std::invalid_argument("delta must lie in [0, 1]");
    if (grid_size < 200) throw std::invalid_argument("bridge grid_size must be >= 200");
    if (mc_count < 1000) throw std::invalid_argument("bridge mc_count must be >= 1000");

    BridgeNull null;
    null.delta = delta;
    null.a = a;
    null.b = b;
    null.grid_size = grid_size;
    null.mc_count = mc_count;
    null.seed = seed;
    null.samples.resize(static_cast<std::size_t>(mc_count));

    const long n = grid_size;
    const long k_lo = std::max<long>(1, static_cast<long>(std::ceil(a * n - 1e-9)));
    const long k_hi = std::min<long>(n - 1, static_cast<long>(std::floor(b * n + 1e-9)));
    if (k_lo > k_hi) throw std::invalid_argument("bridge window contains no grid point");

    // 1 / (t(1-t))^(1-delta) at each scanned grid point
    std::vector<double> inv_weight(static_cast<std::size_t>(k_hi - k_lo + 1));
    for (long k = k_lo; k <= k_hi; ++k) {
        const double t = static_cast<double>(k) / n;
        inv_weight[static_cast<std::size_t>(k - k_lo)] = std::pow(t * (1.0 - t), delta - 1.0);
    }

    const double step_sd = 1.0 / std::sqrt(static_cast<double>(n));
    parallel_for(mc_count, n_threads, [&](long d) {
        Rng rng(derive_seed(seed, "bridge", static_cast<std::uint64_t>(d)));
        std::vector<double> walk(static_cast<std::size_t>(n + 1));
        walk[0] = 0.0;
        for (long k = 1; k <= n; ++k)
            walk[static_cast<std::size_t>(k)] =
                walk[static_cast<std::size_t>(k - 1)] + step_sd * rng.normal();
        const double drift = walk[static_cast<std::size_t>(n)] / n;
        double best = 0.0;
        for (long k = k_lo; k <= k_hi; ++k) {
            const double bridge = walk[static_cast<std::size_t>(k)] - drift * k;
            const double value = std::fabs(bridge) * inv_weight[static_cast<std::size_t>(k - k_lo)];
            if (value > best) best = value;
        }
        null.samples[static_cast<std::size_t>(d)] = best;
    });
    std::sort(null.samples.begin(), null.samples.end());
    return null;
}

TestOutcome asymptotic_cusum_test(const ChannelSeries& series, double delta, double alpha,
                                  const BridgeNull& null) {
    validate_series(series);
    if (null.delta != delta)
        throw std::invalid_argument("bridge null simulated for a different delta");

    const long T = series.length();
    const auto observed = cusum_statistic(series, CusumConfig{delta, 0.0, 1.0});
    const double mean = static_cast<double>(series_total(series)) / T;
    const double variance = series.kind == Kind::binary ? mean * (1.0 - mean) : mean;

    TestOutcome outcome;
    outcome.alpha = alpha;
    outcome.changepoint = observed.arg_t;

    if (variance <= 0.0) {
        outcome.statistic = 0.0;
        outcome.p_value = 1.0;
        outcome.reject = false;
        outcome.calibration = "degenerate";
        return outcome;
    }

    outcome.statistic = std::sqrt(static_cast<double>(T)) * observed.value / std::sqrt(variance);
    outcome.p_value = null.upper_tail_pvalue(outcome.statistic);
    outcome.reject = outcome.p_value <= alpha;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "bridge:delta=%g:a=%g:b=%g:grid=%ld:n=%ld", null.delta, null.a,
                  null.b, null.grid_size, null.mc_count);
    outcome.calibration = buf;
    return outcome;
}

}  // namespace cpdx
