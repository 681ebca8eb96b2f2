#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpdx/series.hpp"
#include "cpdx/statistics.hpp"

namespace cpdx {

class CalibrationStore;

// Which conditional statistic a calibration belongs to. minp_min is the
// minimum of the per-split conditional p-values.
struct StatisticId {
    enum class Type { cusum, lr, minp_min };

    Type type = Type::lr;
    double delta = 1.0;  // only meaningful for cusum

    static StatisticId cusum(double delta) { return {Type::cusum, delta}; }
    static StatisticId lr() { return {Type::lr, 0.0}; }
    static StatisticId minp_min() { return {Type::minp_min, 0.0}; }

    std::string label() const;
};

// Monte Carlo sample of a statistic under the conditional null given the
// series total. Samples are sorted ascending.
struct NullCalibration {
    std::string statistic_id;
    Kind kind = Kind::binary;
    long T = 0;
    long s_total = 0;
    long mc_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> samples;

    // Add-one Monte Carlo p-values; never exactly zero.
    double upper_tail_pvalue(double observed) const;
    double lower_tail_pvalue(double observed) const;

    // Order statistic at rank floor(alpha * mc_count); rank 0 maps to the
    // smallest sample.
    double lower_quantile(double alpha) const;
};

// Draws mc_count conditional null series, evaluates the statistic on each,
// and returns the sorted sample. Reproducible for a fixed seed.
NullCalibration calibrate_null(const StatisticId& statistic, Kind kind, long T, long s_total,
                               long mc_count, std::uint64_t seed);

inline constexpr long kDefaultMcCount = 50000;
inline constexpr long kMinMcCount = 1000;

// Exact conditional test for the cusum and lr statistics: large observed
// values reject. Constant-conditioning states (binary totals 0 or T, count
// total 0) give p = 1 without calibrating. A store, when provided, shares
// calibrations across calls keyed by (statistic, kind, T, s_total,
// mc_count, seed).
TestOutcome exact_test(const ChannelSeries& series, const StatisticId& statistic, double alpha,
                       long mc_count, std::uint64_t seed, CalibrationStore* store = nullptr);

// Multiplicity-corrected test on the minimum per-split p-value: rejects
// when the observed minimum falls below the lower alpha-quantile of its
// conditional null law. The reported p_value is the lower-tail Monte Carlo
// p-value of the observed minimum.
TestOutcome minp_multiplicity_test(const ChannelSeries& series, double alpha, long mc_count,
                                   std::uint64_t seed, CalibrationStore* store = nullptr);

}  // namespace cpdx
