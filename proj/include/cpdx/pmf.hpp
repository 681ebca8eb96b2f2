#pragma once

#include <vector>

#include "cpdx/rng.hpp"

namespace cpdx {

// log P[Q = q] for Q ~ Hypergeometric(draws, successes, population):
// q successes seen when drawing `draws` items without replacement from a
// population of size `population` containing `successes` marked items.
// Returns -inf outside the support. Computed through lgamma.
double hypergeometric_log_pmf(long q, long draws, long successes, long population);

// log P[Q = q] for Q ~ Binomial(trials, p); -inf outside [0, trials].
// The degenerate boundaries p = 0 and p = 1 are exact.
double binomial_log_pmf(long q, long trials, double p);

// Uniformly random arrangement of s_total ones among T positions, i.e. the
// conditional law of a Bernoulli series given its total.
std::vector<long> sample_binary_given_total(long T, long s_total, Rng& rng);

// Counts per epoch with fixed total: Multinomial(s_total; 1/T, ..., 1/T),
// the conditional law of a Poisson series given its total.
std::vector<long> sample_counts_given_total(long T, long s_total, Rng& rng);

}  // namespace cpdx
