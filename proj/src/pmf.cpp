#include "cpdx/pmf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cpdx {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_choose(long n, long k) {
    return std::lgamma(static_cast<double>(n + 1)) - std::lgamma(static_cast<double>(k + 1)) -
           std::lgamma(static_cast<double>(n - k + 1));
}

}  // namespace

double hypergeometric_log_pmf(long q, long draws, long successes, long population) {
    if (population < 0 || draws < 0 || successes < 0 || draws > population || successes > population)
        throw std::invalid_argument("hypergeometric domain: need 0 <= draws, successes <= population");
    const long lo = std::max<long>(0, draws - (population - successes));
    const long hi = std::min(draws, successes);
    if (q < lo || q > hi) return kNegInf;
    return log_choose(successes, q) + log_choose(population - successes, draws - q) -
           log_choose(population, draws);
}

double binomial_log_pmf(long q, long trials, double p) {
    if (trials < 0) throw std::invalid_argument("binomial domain: trials must be >= 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial domain: p must lie in [0, 1]");
    if (q < 0 || q > trials) return kNegInf;
    if (p == 0.0) return q == 0 ? 0.0 : kNegInf;
    if (p == 1.0) return q == trials ? 0.0 : kNegInf;
    return log_choose(trials, q) + static_cast<double>(q) * std::log(p) +
           static_cast<double>(trials - q) * std::log1p(-p);
}

std::vector<long> sample_binary_given_total(long T, long s_total, Rng& rng) {
    if (T < 1 || s_total < 0 || s_total > T)
        throw std::invalid_argument("binary sampler domain: need 0 <= s_total <= T, T >= 1");
    std::vector<long> out(static_cast<std::size_t>(T), 0);
    long need = s_total;
    for (long pos = 0; pos < T && need > 0; ++pos) {
        const long remaining = T - pos;
        // P[select] = need / remaining keeps every arrangement equally likely.
        if (rng.uniform_below(static_cast<std::uint64_t>(remaining)) <
            static_cast<std::uint64_t>(need)) {
            out[static_cast<std::size_t>(pos)] = 1;
            --need;
        }
    }
    return out;
}

std::vector<long> sample_counts_given_total(long T, long s_total, Rng& rng) {
    if (T < 1 || s_total < 0)
        throw std::invalid_argument("count sampler domain: need T >= 1, s_total >= 0");
    std::vector<long> out(static_cast<std::size_t>(T), 0);
    for (long k = 0; k < s_total; ++k)
        ++out[static_cast<std::size_t>(rng.uniform_below(static_cast<std::uint64_t>(T)))];
    return out;
}

}  // namespace cpdx
