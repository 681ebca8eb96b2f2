#include "cpdx/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cpdx/pmf.hpp"

namespace cpdx {

namespace {

constexpr double kLogTieTolerance = 1e-9;

double entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log(x) - (1.0 - x) * std::log(1.0 - x);
}

// Poisson profile term; continuous extension g(0) = 0.
double poisson_g(double x) {
    if (x <= 0.0) return 0.0;
    return x * (1.0 - std::log(x));
}

double scan_weight(double t_frac, double delta) {
    const double x = t_frac * (1.0 - t_frac);
    if (delta == 0.0) return 1.0;
    if (delta == 1.0) return x;
    if (delta == 0.5) return std::sqrt(x);
    return std::pow(x, delta);
}

template <double (*Term)(double)>
StatisticValue lr_from_sums(const std::vector<long>& sums) {
    const long T = static_cast<long>(sums.size());
    const double total = static_cast<double>(sums.back());
    const double null_fit = T * Term(total / T);
    double best_obj = 0.0;
    long best_t = 1;
    for (long t = 1; t <= T - 1; ++t) {
        const double s_t = static_cast<double>(sums[t - 1]);
        const double obj = t * Term(s_t / t) + (T - t) * Term((total - s_t) / (T - t));
        if (t == 1 || obj < best_obj) {
            best_obj = obj;
            best_t = t;
        }
    }
    return {2.0 * (null_fit - best_obj), best_t};
}

}  // namespace

StatisticValue cusum_from_prefix_sums(const std::vector<long>& sums, const CusumConfig& cfg) {
    const long T = static_cast<long>(sums.size());
    const ScanRange range = scan_range(cfg, T);
    const double total = static_cast<double>(sums.back());
    StatisticValue best{-1.0, range.lo};
    for (long t = range.lo; t <= range.hi; ++t) {
        const double s_t = static_cast<double>(sums[t - 1]);
        const double diff = std::fabs(s_t / t - (total - s_t) / (T - t));
        const double value = scan_weight(static_cast<double>(t) / T, cfg.delta) * diff;
        if (value > best.value) best = {value, t};
    }
    return best;
}

StatisticValue lr_binary_from_prefix_sums(const std::vector<long>& sums) {
    return lr_from_sums<entropy>(sums);
}

StatisticValue lr_count_from_prefix_sums(const std::vector<long>& sums) {
    return lr_from_sums<poisson_g>(sums);
}

ScanRange scan_range(const CusumConfig& cfg, long T) {
    if (T < 2) throw std::invalid_argument("scan range needs T >= 2");
    if (!(cfg.a < cfg.b)) throw std::invalid_argument("scan window needs a < b");
    if (cfg.delta < 0.0 || cfg.delta > 1.0)
        throw std::invalid_argument("delta must lie in [0, 1]");
    ScanRange range;
    range.lo = std::max<long>(1, static_cast<long>(std::ceil(cfg.a * T - 1e-9)));
    range.hi = std::min<long>(T - 1, static_cast<long>(std::floor(cfg.b * T + 1e-9)));
    if (range.lo > range.hi)
        throw std::invalid_argument("empty scan range for T = " + std::to_string(T));
    return range;
}

StatisticValue cusum_statistic(const ChannelSeries& series, const CusumConfig& cfg) {
    validate_series(series);
    return cusum_from_prefix_sums(prefix_sums(series.values), cfg);
}

StatisticValue lr_statistic_binary(const ChannelSeries& series) {
    validate_series(series);
    if (series.kind != Kind::binary)
        throw std::invalid_argument("binary LR statistic requires a binary series");
    return lr_binary_from_prefix_sums(prefix_sums(series.values));
}

StatisticValue lr_statistic_count(const ChannelSeries& series) {
    validate_series(series);
    if (series.kind != Kind::count)
        throw std::invalid_argument("count LR statistic requires a count series");
    return lr_count_from_prefix_sums(prefix_sums(series.values));
}

StatisticValue lr_statistic(const ChannelSeries& series) {
    return series.kind == Kind::binary ? lr_statistic_binary(series) : lr_statistic_count(series);
}

ConditionalPValueTable::ConditionalPValueTable(Kind kind, long T, long s_total)
    : kind_(kind), T_(T), s_total_(s_total) {
    if (T < 2) throw std::invalid_argument("conditional table needs T >= 2");
    if (s_total < 0 || (kind == Kind::binary && s_total > T))
        throw std::invalid_argument("invalid s_total for conditional table");
    rows_.resize(static_cast<std::size_t>(T - 1));
    for (long i = 1; i <= T - 1; ++i) {
        Row& row = rows_[static_cast<std::size_t>(i - 1)];
        long q_hi;
        if (kind == Kind::binary) {
            row.q_lo = std::max<long>(0, i - (T - s_total));
            q_hi = std::min(i, s_total);
        } else {
            row.q_lo = 0;
            q_hi = s_total;
        }
        row.log_pmf.reserve(static_cast<std::size_t>(q_hi - row.q_lo + 1));
        for (long q = row.q_lo; q <= q_hi; ++q) {
            row.log_pmf.push_back(kind == Kind::binary
                                      ? hypergeometric_log_pmf(q, i, s_total, T)
                                      : binomial_log_pmf(q, s_total,
                                                         static_cast<double>(i) / T));
        }
        row.sorted_log_pmf = row.log_pmf;
        std::sort(row.sorted_log_pmf.begin(), row.sorted_log_pmf.end());
        row.cum_mass.resize(row.sorted_log_pmf.size());
        double acc = 0.0;  // ascending order keeps the summation accurate
        for (std::size_t k = 0; k < row.sorted_log_pmf.size(); ++k) {
            acc += std::exp(row.sorted_log_pmf[k]);
            row.cum_mass[k] = acc;
        }
    }
}

double ConditionalPValueTable::pvalue(long i, long s_i) const {
    if (i < 1 || i > T_ - 1) throw std::invalid_argument("split index out of range");
    const Row& row = rows_[static_cast<std::size_t>(i - 1)];
    const long offset = s_i - row.q_lo;
    if (offset < 0 || offset >= static_cast<long>(row.log_pmf.size()))
        throw std::invalid_argument("partial sum outside the conditional support");
    const double threshold = row.log_pmf[static_cast<std::size_t>(offset)] + kLogTieTolerance;
    const auto it =
        std::upper_bound(row.sorted_log_pmf.begin(), row.sorted_log_pmf.end(), threshold);
    const std::size_t rank = static_cast<std::size_t>(it - row.sorted_log_pmf.begin());
    return std::min(1.0, row.cum_mass[rank - 1]);
}

StatisticValue ConditionalPValueTable::min_pvalue(const std::vector<long>& sums) const {
    StatisticValue best{2.0, 1};
    for (long i = 1; i <= T_ - 1; ++i) {
        const double p = pvalue(i, sums[static_cast<std::size_t>(i - 1)]);
        if (p < best.value) best = {p, i};
    }
    return best;
}

std::vector<double> ConditionalPValueTable::pvalues(const std::vector<long>& sums) const {
    std::vector<double> out(static_cast<std::size_t>(T_ - 1));
    for (long i = 1; i <= T_ - 1; ++i)
        out[static_cast<std::size_t>(i - 1)] = pvalue(i, sums[static_cast<std::size_t>(i - 1)]);
    return out;
}

std::vector<double> minp_pvalue_vector(const ChannelSeries& series) {
    validate_series(series);
    const auto sums = prefix_sums(series.values);
    const ConditionalPValueTable table(series.kind, series.length(), sums.back());
    return table.pvalues(sums);
}

long estimate_changepoint(const ChannelSeries& series, EstimatorKind method,
                          const CusumConfig& cusum_cfg) {
    switch (method) {
        case EstimatorKind::cusum:
            return cusum_statistic(series, cusum_cfg).arg_t;
        case EstimatorKind::lr:
            return lr_statistic(series).arg_t;
        case EstimatorKind::minp: {
            validate_series(series);
            const auto sums = prefix_sums(series.values);
            const ConditionalPValueTable table(series.kind, series.length(), sums.back());
            return table.min_pvalue(sums).arg_t;
        }
    }
    throw std::logic_error("unreachable estimator kind");
}

}  // namespace cpdx
