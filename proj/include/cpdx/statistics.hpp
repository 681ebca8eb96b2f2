#pragma once

#include <string>
#include <vector>

#include "cpdx/series.hpp"

namespace cpdx {

// Scan-window fractions for the weighted mean-difference maximum. The
// integer scan range is [ceil(a*T), floor(b*T)] intersected with [1, T-1];
// the defaults scan everything.
struct CusumConfig {
    double delta = 1.0;
    double a = 0.0;
    double b = 1.0;
};

struct ScanRange {
    long lo = 0;
    long hi = 0;
};

// Throws std::invalid_argument when the window is empty or malformed.
ScanRange scan_range(const CusumConfig& cfg, long T);

// A statistic together with the optimizing split index (smallest on ties).
struct StatisticValue {
    double value = 0.0;
    long arg_t = 0;
};

// Decision record shared by the exact and asymptotic tests.
struct TestOutcome {
    double statistic = 0.0;
    double p_value = 1.0;
    bool reject = false;
    double alpha = 0.0;
    long changepoint = 0;
    std::string calibration;
};

StatisticValue cusum_statistic(const ChannelSeries& series, const CusumConfig& cfg);

// -2 log likelihood-ratio of one split against none; >= 0 up to rounding.
StatisticValue lr_statistic_binary(const ChannelSeries& series);
StatisticValue lr_statistic_count(const ChannelSeries& series);
StatisticValue lr_statistic(const ChannelSeries& series);  // dispatches on kind

// Prefix-sum variants skip validation; calibration loops sit on these.
StatisticValue cusum_from_prefix_sums(const std::vector<long>& sums, const CusumConfig& cfg);
StatisticValue lr_binary_from_prefix_sums(const std::vector<long>& sums);
StatisticValue lr_count_from_prefix_sums(const std::vector<long>& sums);

// Per-split two-sided conditional p-values p_1..p_{T-1}. Split i is scored
// against the conditional law of S_i given S_T: hypergeometric for binary
// series, binomial for counts. Probability-ordering p-value: mass of all
// support points whose pmf does not exceed the observed one (log-space
// comparison with relative tolerance 1e-9; near-ties count as included).
std::vector<double> minp_pvalue_vector(const ChannelSeries& series);

// Precomputed conditional pmf orderings for one (kind, T, s_total) state,
// so repeated p-value evaluations cost O(log support) per split.
class ConditionalPValueTable {
public:
    ConditionalPValueTable(Kind kind, long T, long s_total);

    long T() const { return T_; }
    long s_total() const { return s_total_; }

    // p-value of observing partial sum s_i at split i (1 <= i <= T-1).
    double pvalue(long i, long s_i) const;

    // min_i p_i with its smallest attaining index, from S_1..S_T.
    StatisticValue min_pvalue(const std::vector<long>& sums) const;

    std::vector<double> pvalues(const std::vector<long>& sums) const;

private:
    struct Row {
        long q_lo = 0;
        std::vector<double> log_pmf;        // by q - q_lo
        std::vector<double> sorted_log_pmf; // ascending
        std::vector<double> cum_mass;       // prefix sums of exp(sorted_log_pmf)
    };

    Kind kind_;
    long T_;
    long s_total_;
    std::vector<Row> rows_;
};

enum class EstimatorKind { cusum, lr, minp };

// Changepoint location estimate: the optimizing index of the chosen test
// objective, smallest index on ties.
long estimate_changepoint(const ChannelSeries& series, EstimatorKind method,
                          const CusumConfig& cusum_cfg = CusumConfig{});

}  // namespace cpdx
