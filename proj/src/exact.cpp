#include "cpdx/exact.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <stdexcept>

#include "cpdx/cache.hpp"
#include "cpdx/pmf.hpp"
#include "cpdx/rng.hpp"

namespace cpdx {

namespace {

bool degenerate_total(Kind kind, long T, long s_total) {
    if (kind == Kind::binary) return s_total == 0 || s_total == T;
    return s_total == 0;
}

std::uint64_t calibration_seed(std::uint64_t seed, const StatisticId& statistic, Kind kind, long T,
                               long s_total, long mc_count) {
    return derive_seed(seed, "calibration", statistic.label(), static_cast<std::uint64_t>(kind),
                       static_cast<std::uint64_t>(T), static_cast<std::uint64_t>(s_total),
                       static_cast<std::uint64_t>(mc_count));
}

std::string calibration_tag(const NullCalibration& calib) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "mc:%s:%s:T=%ld:s=%ld:n=%ld", calib.statistic_id.c_str(),
                  kind_name(calib.kind).c_str(), calib.T, calib.s_total, calib.mc_count);
    return buf;
}

}  // namespace

std::string StatisticId::label() const {
    switch (type) {
        case Type::lr:
            return "lr";
        case Type::minp_min:
            return "minp";
        case Type::cusum: {
            char buf[32];
            std::snprintf(buf, sizeof(buf), "cu%g", delta);
            return buf;
        }
    }
    throw std::logic_error("unreachable statistic type");
}

double NullCalibration::upper_tail_pvalue(double observed) const {
    const auto it = std::lower_bound(samples.begin(), samples.end(), observed);
    const long count_ge = static_cast<long>(samples.end() - it);
    return static_cast<double>(1 + count_ge) / static_cast<double>(mc_count + 1);
}

double NullCalibration::lower_tail_pvalue(double observed) const {
    const auto it = std::upper_bound(samples.begin(), samples.end(), observed);
    const long count_le = static_cast<long>(it - samples.begin());
    return static_cast<double>(1 + count_le) / static_cast<double>(mc_count + 1);
}

double NullCalibration::lower_quantile(double alpha) const {
    const long rank = static_cast<long>(std::floor(alpha * static_cast<double>(mc_count)));
    if (rank <= 0) return samples.front();
    return samples[static_cast<std::size_t>(std::min<long>(rank, mc_count) - 1)];
}

NullCalibration calibrate_null(const StatisticId& statistic, Kind kind, long T, long s_total,
                               long mc_count, std::uint64_t seed) {
    if (mc_count < kMinMcCount)
        throw std::invalid_argument("mc_count below " + std::to_string(kMinMcCount) +
                                    " is too coarse for calibration");
    if (T < 2) throw std::invalid_argument("calibration needs T >= 2");
    if (s_total < 0 || (kind == Kind::binary && s_total > T))
        throw std::invalid_argument("invalid s_total for calibration");

    NullCalibration calib;
    calib.statistic_id = statistic.label();
    calib.kind = kind;
    calib.T = T;
    calib.s_total = s_total;
    calib.mc_count = mc_count;
    calib.seed = seed;
    calib.samples.resize(static_cast<std::size_t>(mc_count));

    std::optional<ConditionalPValueTable> table;
    if (statistic.type == StatisticId::Type::minp_min) table.emplace(kind, T, s_total);
    const CusumConfig cusum_cfg{statistic.delta, 0.0, 1.0};

    for (long d = 0; d < mc_count; ++d) {
        Rng rng(derive_seed(seed, static_cast<std::uint64_t>(d)));
        const auto values = kind == Kind::binary ? sample_binary_given_total(T, s_total, rng)
                                                 : sample_counts_given_total(T, s_total, rng);
        const auto sums = prefix_sums(values);
        double value = 0.0;
        switch (statistic.type) {
            case StatisticId::Type::cusum:
                value = cusum_from_prefix_sums(sums, cusum_cfg).value;
                break;
            case StatisticId::Type::lr:
                value = kind == Kind::binary ? lr_binary_from_prefix_sums(sums).value
                                             : lr_count_from_prefix_sums(sums).value;
                break;
            case StatisticId::Type::minp_min:
                value = table->min_pvalue(sums).value;
                break;
        }
        calib.samples[static_cast<std::size_t>(d)] = value;
    }
    std::sort(calib.samples.begin(), calib.samples.end());
    return calib;
}

TestOutcome exact_test(const ChannelSeries& series, const StatisticId& statistic, double alpha,
                       long mc_count, std::uint64_t seed, CalibrationStore* store) {
    if (statistic.type == StatisticId::Type::minp_min)
        throw std::invalid_argument("minp uses minp_multiplicity_test");
    validate_series(series);

    const auto sums = prefix_sums(series.values);
    const long T = series.length();
    const long s_total = sums.back();

    StatisticValue observed;
    if (statistic.type == StatisticId::Type::cusum) {
        observed = cusum_from_prefix_sums(sums, CusumConfig{statistic.delta, 0.0, 1.0});
    } else {
        observed = series.kind == Kind::binary ? lr_binary_from_prefix_sums(sums)
                                               : lr_count_from_prefix_sums(sums);
    }

    TestOutcome outcome;
    outcome.statistic = observed.value;
    outcome.alpha = alpha;
    outcome.changepoint = observed.arg_t;

    if (degenerate_total(series.kind, T, s_total)) {
        outcome.p_value = 1.0;
        outcome.reject = false;
        outcome.calibration = "degenerate";
        return outcome;
    }

    const std::uint64_t calib_seed =
        calibration_seed(seed, statistic, series.kind, T, s_total, mc_count);
    NullCalibration local;
    const NullCalibration* calib;
    if (store != nullptr) {
        calib = &store->calibration(statistic, series.kind, T, s_total, mc_count, calib_seed);
    } else {
        local = calibrate_null(statistic, series.kind, T, s_total, mc_count, calib_seed);
        calib = &local;
    }

    outcome.p_value = calib->upper_tail_pvalue(observed.value);
    outcome.reject = outcome.p_value <= alpha;
    outcome.calibration = calibration_tag(*calib);
    return outcome;
}

TestOutcome minp_multiplicity_test(const ChannelSeries& series, double alpha, long mc_count,
                                   std::uint64_t seed, CalibrationStore* store) {
    validate_series(series);
    const auto sums = prefix_sums(series.values);
    const long T = series.length();
    const long s_total = sums.back();

    TestOutcome outcome;
    outcome.alpha = alpha;

    if (degenerate_total(series.kind, T, s_total)) {
        outcome.statistic = 1.0;  // every split p-value is 1
        outcome.p_value = 1.0;
        outcome.reject = false;
        outcome.changepoint = 1;
        outcome.calibration = "degenerate";
        return outcome;
    }

    const StatisticId statistic = StatisticId::minp_min();
    const std::uint64_t calib_seed =
        calibration_seed(seed, statistic, series.kind, T, s_total, mc_count);

    StatisticValue observed;
    NullCalibration local;
    const NullCalibration* calib;
    if (store != nullptr) {
        observed = store->pvalue_table(series.kind, T, s_total).min_pvalue(sums);
        calib = &store->calibration(statistic, series.kind, T, s_total, mc_count, calib_seed);
    } else {
        const ConditionalPValueTable table(series.kind, T, s_total);
        observed = table.min_pvalue(sums);
        local = calibrate_null(statistic, series.kind, T, s_total, mc_count, calib_seed);
        calib = &local;
    }

    outcome.statistic = observed.value;
    outcome.changepoint = observed.arg_t;
    outcome.p_value = calib->lower_tail_pvalue(observed.value);
    outcome.reject = observed.value <= calib->lower_quantile(alpha);
    outcome.calibration = calibration_tag(*calib);
    return outcome;
}

}  // namespace cpdx
