#ifndef EXTAIL_SPECIAL_HPP
#define EXTAIL_SPECIAL_HPP

#include <cstdint>
#include <utility>

// Small set of special-function wrappers used across the toolkit.
// Everything here is deterministic and thread safe.

namespace extail {

// Gamma function on (0, 170]; relative error <= 1e-12 on that range.
// Throws std::domain_error for x <= 0 and std::overflow_error once
// Gamma(x) exceeds the double range (x > ~171.6).
double gamma_function(double x);

// ln Gamma(x), x > 0.
double log_gamma(double x);

// ln erfc(x), stable for large positive x where erfc underflows.
double log_erfc(double x);

// Standard normal quantile, p in (0,1).
double normal_quantile(double p);

// P(|Z| >= t) for Z standard normal, t >= 0.
double normal_two_sided_tail(double t);

// P(lo < Z <= hi) for Z standard normal; lo/hi may be +-infinity.
double normal_interval_prob(double lo, double hi);

// Inverse of the regularized lower incomplete gamma function:
// returns x with P(shape, x) = p. Used for quantile-inversion sampling.
double gamma_p_inverse(double shape, double p);

// Exact two-sided Clopper-Pearson binomial interval at the given
// confidence level (default 95%). Valid at successes = 0 and = trials.
std::pair<double, double> clopper_pearson(std::uint64_t successes,
                                          std::uint64_t trials,
                                          double confidence = 0.95);

}  // namespace extail

#endif
