#include "extail/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace extail {

double gamma_function(double x) {
  if (!(x > 0.0)) throw std::domain_error("gamma_function: x must be > 0");
  if (x > 171.61) throw std::overflow_error("gamma_function: result exceeds double range");
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma: x must be > 0");
  return std::lgamma(x);
}

double log_erfc(double x) {
  // erfc underflows near x ~ 26.6; switch to the asymptotic series well
  // before that so both branches are accurate where they are used.
  if (x < 10.0) return std::log(std::erfc(x));
  // ln erfc(x) = -x^2 - ln(x sqrt(pi)) + ln(1 - 1/(2x^2) + 3/(4x^4) - ...)
  const double ix2 = 1.0 / (x * x);
  const double series = 1.0 + ix2 * (-0.5 + ix2 * (0.75 + ix2 * (-1.875 + ix2 * 6.5625)));
  return -x * x - std::log(x) - 0.5 * std::log(M_PI) + std::log(series);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile: p must be in (0,1)");
  // Phi^{-1}(p) = -sqrt(2) erfc^{-1}(2p)
  return -std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double normal_two_sided_tail(double t) {
  if (!(t >= 0.0)) throw std::domain_error("normal_two_sided_tail: t must be >= 0");
  return std::erfc(t / std::sqrt(2.0));
}

double normal_interval_prob(double lo, double hi) {
  if (!(lo <= hi)) throw std::domain_error("normal_interval_prob: lo must be <= hi");
  auto cdf = [](double x) {
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
  };
  return cdf(hi) - cdf(lo);
}

double gamma_p_inverse(double shape, double p) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_p_inverse: shape must be > 0");
  if (!(p >= 0.0 && p < 1.0)) throw std::domain_error("gamma_p_inverse: p must be in [0,1)");
  return boost::math::gamma_p_inv(shape, p);
}

std::pair<double, double> clopper_pearson(std::uint64_t successes,
                                          std::uint64_t trials,
                                          double confidence) {
  if (trials == 0) throw std::domain_error("clopper_pearson: trials must be >= 1");
  if (successes > trials) throw std::domain_error("clopper_pearson: successes > trials");
  if (!(confidence > 0.0 && confidence < 1.0))
    throw std::domain_error("clopper_pearson: confidence must be in (0,1)");
  using binom = boost::math::binomial_distribution<double>;
  const double half_alpha = 0.5 * (1.0 - confidence);
  const double lo = binom::find_lower_bound_on_p(static_cast<double>(trials),
                                                 static_cast<double>(successes), half_alpha);
  const double hi = binom::find_upper_bound_on_p(static_cast<double>(trials),
                                                 static_cast<double>(successes), half_alpha);
  return {lo, hi};
}

}  // namespace extail
