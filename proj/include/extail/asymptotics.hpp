#ifndef EXTAIL_ASYMPTOTICS_HPP
#define EXTAIL_ASYMPTOTICS_HPP

#include <string>
#include <utility>
#include <vector>

#include "extail/model.hpp"
#include "extail/quadrature.hpp"

// Large-t analysis of the two mixture bounds: the power-decay equivalent of
// the direct-power bound, and the second-order Laplace (saddle-point)
// expansion of the inverse-power bound R0(t). The inverse-power prefactor
// t-exponent has two closed-form candidates that disagree: c11 from the
// original derivation, which carries a trailing -1, and the textbook
// second-order Laplace value without it. Both are computed and the verify
// pipeline adjudicates between them numerically instead of trusting either.

namespace extail {

struct IllConditionedFitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Interior minimum of the two-power exponent
//   phi(Q) = c1 t^alpha Q^-beta + c3 Q^kappa
// with Q* = (beta c1 t^alpha / (kappa c3))^{1/(beta+kappa)} in closed form.
struct SaddleSolution {
  double q_star = 0.0;
  double phi_star = 0.0;   // phi(Q*)
  double phi2_star = 0.0;  // phi''(Q*) > 0
};

// Requires an inverse-power envelope and t >= 1. The closed form is refined
// by one safeguarded Newton step that only polishes rounding.
SaddleSolution saddle_solve(const TailEnvelope& e, const MixingDensity& m, double t);

enum class MatchVerdict { Reference, Laplace, Inconclusive };

std::string to_string(MatchVerdict v);

// Closed-form constants of the inverse-power asymptotics plus the outcome
// of the numerical adjudication (fitted_* are NaN until a fit is attached).
struct AsymptoticReport {
  double rate_exponent = 0.0;  // rho = alpha kappa / (beta + kappa)
  double rate_constant = 0.0;  // phi(Q*) / t^rho, independent of t
  double prefactor_exponent_reference = 0.0;  // c11 = alpha(2 gamma + 2 - kappa)/(2(beta+kappa)) - 1
  double prefactor_exponent_laplace = 0.0;    // same expression without the -1
  double prefactor_constant = 0.0;            // sqrt(2 pi) c2 c10 (A+B)^{-1/2}
  double prefactor_constant_laplace = 0.0;
  double a_const = 0.0;   // A = beta / (gamma + 1)
  double b_const = 0.0;   // B = kappa / (gamma + 1)
  double c10 = 0.0;       // (gamma+1)^{-1} [c1^kappa c3^beta beta^kappa kappa^beta]^{1/(beta+kappa)}
  double fitted_rate = 0.0;
  double fitted_prefactor_exponent = 0.0;
  MatchVerdict match_verdict = MatchVerdict::Inconclusive;
};

AsymptoticReport make_report(const MixingDensity& m, const TailEnvelope& e);

// Fills fitted_rate / fitted_prefactor_exponent and decides the verdict:
// Reference or Laplace when the fitted prefactor exponent is within
// match_tol of exactly one candidate, Inconclusive otherwise.
void adjudicate(AsymptoticReport& report, double fitted_rate,
                double fitted_prefactor_exponent, double match_tol);

// t^theta I[theta,g](t) / Gamma(theta) for each t in the grid (strictly
// increasing, all >= 1). The ratios are <= 1 and tend to 1 as t grows.
std::vector<std::pair<double, double>> lemma41_ratio(const AuxIntegralSpec& spec,
                                                     const std::vector<double>& t_grid,
                                                     double rel_tol = 1e-11);

// Leading-order equivalent of bound_power as t -> infinity:
//   c1^{-(gamma+1)/beta} c2 beta^{-1} Gamma((gamma+1)/beta) t^{-alpha(gamma+1)/beta}.
double power_asym(const MixingDensity& m, const TailEnvelope& e, double t);

// Both large-t evaluations of the inverse-power bound R0(t): the
// closed-form c11 expression and the second-order Laplace value
//   c2 Q*^gamma sqrt(2 pi / phi''(Q*)) exp(-phi(Q*)).
struct ExpAsymptotic {
  double log_reference = 0.0;
  double log_laplace = 0.0;
  double value_reference = 0.0;  // exp(log_*), may underflow to 0
  double value_laplace = 0.0;
};

ExpAsymptotic exp_asym(const MixingDensity& m, const TailEnvelope& e, double t);

// Least-squares fit of log R0(t) = -r t^rho + s ln t + const over
// (t, log R0) points. Requires >= 6 points spanning at least two decades.
// Throws IllConditionedFitError when the design matrix condition number
// exceeds 1e12.
struct FitResult {
  double rate = 0.0;                // r
  double prefactor_exponent = 0.0;  // s
  double condition_number = 0.0;
};

FitResult fit_asymptotics(const std::vector<std::pair<double, double>>& log_values,
                          double rho);

// Numerical probe of the slowly-varying-weight limit: reports t^theta J,
// Gamma(theta) L(1/t) and the fixed integral int y^{theta-1} e^{-y} L(y) dy
// side by side. Nothing is asserted about which of these agree; the three
// quantities genuinely differ for weights with L(0+) = 0.
struct SlowlyVaryingProbe {
  double t_theta_j = 0.0;
  double gamma_weight_at_inv_t = 0.0;
  double limit_integral = 0.0;
};

SlowlyVaryingProbe slowly_varying_probe(const AuxIntegralSpec& spec, double t,
                                        double rel_tol = 1e-10);

}  // namespace extail

#endif
