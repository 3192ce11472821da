#ifndef EXTAIL_QUADRATURE_HPP
#define EXTAIL_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <stdexcept>

#include "extail/model.hpp"

// Semi-axis quadrature in the log domain. One engine evaluates every
// integral of the toolkit: the integrand is supplied as ln f(Q), the
// half line is mapped to the real line by the double-exponential change
// of variables Q = exp((pi/2) sinh u), and the transformed log-integrand's
// peak is located and subtracted before anything is exponentiated. The
// returned ln(integral) is therefore exact-scale even when the integral
// itself is far below the smallest double.

namespace extail {

struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct QuadratureResult {
  double log_value = 0.0;  // ln of the integral; authoritative
  double value = 0.0;      // exp(log_value); may underflow to 0
  double abs_tol_achieved = 0.0;
  double rel_tol_achieved = 0.0;
  std::size_t evaluations = 0;
  bool singular_endpoint = false;  // integrable singularity at the origin
};

// ln f as a function of Q. Both Q and ln Q are passed so integrands stay
// evaluable where Q itself has left the double range; implementations may
// use either argument.
using LogIntegrand = std::function<double(double q, double log_q)>;

// ln of integral_0^inf f(Q) dQ with relative error <= rel_tol,
// rel_tol in [1e-13, 1e-2]. The transformed log-integrand must be
// unimodal, which holds for every integrand in this toolkit.
// Throws NonConvergenceError when the evaluation budget (2^20) is
// exhausted and std::domain_error when f_log produces a NaN.
QuadratureResult integrate_semiaxis(const LogIntegrand& f_log, double rel_tol);

// The triple (theta, g, optional L) defining
//   I[theta,g](t)    = int_0^inf x^{theta-1} exp(-t x - g(x)) dx
//   J[theta,g,L](t)  = int_0^inf x^{theta-1} exp(-t x - g(x)) L(x) dx.
// g must be nonnegative with g(0) = g(0+) = 0 (checked numerically at
// construction: g(1e-12) <= 1e-8). L, when supplied, must be continuous,
// bounded by the declared l_max, nonnegative, and slowly varying at the
// origin; the default L == 1 gives I.
class AuxIntegralSpec {
 public:
  AuxIntegralSpec(double theta, std::function<double(double)> g);
  AuxIntegralSpec(double theta, std::function<double(double)> g,
                  std::function<double(double)> weight, double weight_max);

  double theta() const { return theta_; }
  double g(double x) const { return g_(x); }
  bool has_weight() const { return static_cast<bool>(weight_); }
  double weight(double x) const;  // 1 when no L was supplied
  double weight_max() const { return weight_max_; }

 private:
  double theta_;
  std::function<double(double)> g_;
  std::function<double(double)> weight_;
  double weight_max_;
};

// I[theta,g](t) (or J when the spec carries a weight), t > 0.
// Always <= Gamma(theta) t^{-theta} * sup L. The result's
// singular_endpoint flag is set when theta < 1 (the integrable
// origin singularity is absorbed by the variable change).
QuadratureResult aux_integral(const AuxIntegralSpec& spec, double t, double rel_tol);

// Mixture tail bound for a direct-power envelope, t >= 1:
//   c2 * int_0^inf Q^gamma exp(-c1 t^alpha Q^beta - c3 Q^kappa) dQ.
QuadratureResult bound_power(const MixingDensity& m, const TailEnvelope& e, double t,
                             double rel_tol);

// Mixture tail bound R0(t) for an inverse-power envelope, t >= 1:
//   c2 * int_0^inf Q^gamma exp(-c1 t^alpha Q^-beta - c3 Q^kappa) dQ.
// The exponent's minimum phi(Q*) is located in closed form and factored
// out before integrating, so the computation never underflows even when
// the bound itself is exp(-10^4) or smaller.
QuadratureResult bound_exp(const MixingDensity& m, const TailEnvelope& e, double t,
                           double rel_tol);

}  // namespace extail

#endif
