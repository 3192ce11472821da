#include "extail/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

#include "extail/special.hpp"

namespace extail {

namespace {

double phi_value(double a, double beta, double c3, double kappa, double q) {
  return a * std::pow(q, -beta) + c3 * std::pow(q, kappa);
}

double phi_prime(double a, double beta, double c3, double kappa, double q) {
  return -beta * a * std::pow(q, -beta - 1.0) + kappa * c3 * std::pow(q, kappa - 1.0);
}

double phi_second(double a, double beta, double c3, double kappa, double q) {
  return beta * (beta + 1.0) * a * std::pow(q, -beta - 2.0) +
         kappa * (kappa - 1.0) * c3 * std::pow(q, kappa - 2.0);
}

}  // namespace

SaddleSolution saddle_solve(const TailEnvelope& e, const MixingDensity& m, double t) {
  if (e.form() != EnvelopeForm::InversePower)
    throw FormMismatchError("saddle_solve: envelope must be inverse-power");
  if (!(t >= 1.0)) throw std::domain_error("saddle_solve: t must be >= 1");

  const double beta = e.beta();
  const double kappa = m.kappa();
  const double c3 = m.c3();
  const double a = e.c1() * std::pow(t, e.alpha());

  // Closed-form interior minimum, exact in real arithmetic; one safeguarded
  // Newton step polishes the rounding from the pow chain.
  const double q0 = std::pow(beta * a / (kappa * c3), 1.0 / (beta + kappa));
  double q = q0 - phi_prime(a, beta, c3, kappa, q0) / phi_second(a, beta, c3, kappa, q0);
  q = std::clamp(q, 0.5 * q0, 2.0 * q0);

  SaddleSolution sol;
  sol.q_star = q;
  sol.phi_star = phi_value(a, beta, c3, kappa, q);
  sol.phi2_star = phi_second(a, beta, c3, kappa, q);
  return sol;
}

std::string to_string(MatchVerdict v) {
  switch (v) {
    case MatchVerdict::Reference: return "reference";
    case MatchVerdict::Laplace: return "laplace";
    default: return "inconclusive";
  }
}

AsymptoticReport make_report(const MixingDensity& m, const TailEnvelope& e) {
  if (e.form() != EnvelopeForm::InversePower)
    throw FormMismatchError("make_report: envelope must be inverse-power");

  const double gamma = m.gamma();
  const double kappa = m.kappa();
  const double c3 = m.c3();
  const double c1 = e.c1();
  const double alpha = e.alpha();
  const double beta = e.beta();
  const double bk = beta + kappa;

  AsymptoticReport r;
  r.rate_exponent = alpha * kappa / bk;
  r.a_const = beta / (gamma + 1.0);
  r.b_const = kappa / (gamma + 1.0);
  r.c10 = std::pow(std::pow(c1, kappa) * std::pow(c3, beta) * std::pow(beta, kappa) *
                       std::pow(kappa, beta),
                   1.0 / bk) /
          (gamma + 1.0);
  r.rate_constant = r.c10 * (1.0 / r.a_const + 1.0 / r.b_const);
  r.prefactor_exponent_reference = alpha * (2.0 * gamma + 2.0 - kappa) / (2.0 * bk) - 1.0;
  r.prefactor_exponent_laplace = alpha * (2.0 * gamma + 2.0 - kappa) / (2.0 * bk);
  r.prefactor_constant =
      std::sqrt(2.0 * M_PI) * m.c2() * r.c10 / std::sqrt(r.a_const + r.b_const);
  r.prefactor_constant_laplace =
      m.c2() * std::sqrt(2.0 * M_PI) *
      std::pow(beta * c1 / (kappa * c3), (gamma + 1.0) / bk) /
      std::sqrt(r.rate_constant * beta * kappa);
  r.fitted_rate = std::numeric_limits<double>::quiet_NaN();
  r.fitted_prefactor_exponent = std::numeric_limits<double>::quiet_NaN();
  return r;
}

void adjudicate(AsymptoticReport& report, double fitted_rate,
                double fitted_prefactor_exponent, double match_tol) {
  report.fitted_rate = fitted_rate;
  report.fitted_prefactor_exponent = fitted_prefactor_exponent;
  const bool hits_reference =
      std::fabs(fitted_prefactor_exponent - report.prefactor_exponent_reference) <= match_tol;
  const bool hits_laplace =
      std::fabs(fitted_prefactor_exponent - report.prefactor_exponent_laplace) <= match_tol;
  if (hits_reference == hits_laplace)
    report.match_verdict = MatchVerdict::Inconclusive;
  else
    report.match_verdict = hits_reference ? MatchVerdict::Reference : MatchVerdict::Laplace;
}

std::vector<std::pair<double, double>> lemma41_ratio(const AuxIntegralSpec& spec,
                                                     const std::vector<double>& t_grid,
                                                     double rel_tol) {
  if (t_grid.empty()) throw std::domain_error("lemma41_ratio: empty t grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (!(t_grid[i] >= 1.0)) throw std::domain_error("lemma41_ratio: all t must be >= 1");
    if (i > 0 && !(t_grid[i] > t_grid[i - 1]))
      throw std::domain_error("lemma41_ratio: t grid must be strictly increasing");
  }
  const double log_gamma_theta = log_gamma(spec.theta());
  std::vector<std::pair<double, double>> out;
  out.reserve(t_grid.size());
  for (double t : t_grid) {
    const QuadratureResult integral = aux_integral(spec, t, rel_tol);
    const double ratio =
        std::exp(spec.theta() * std::log(t) + integral.log_value - log_gamma_theta);
    out.emplace_back(t, ratio);
  }
  return out;
}

double power_asym(const MixingDensity& m, const TailEnvelope& e, double t) {
  if (e.form() != EnvelopeForm::DirectPower)
    throw FormMismatchError("power_asym: envelope must be direct-power");
  if (!(t >= 1.0)) throw std::domain_error("power_asym: t must be >= 1");
  const double exponent = (m.gamma() + 1.0) / e.beta();
  return std::exp(-exponent * std::log(e.c1()) + std::log(m.c2()) - std::log(e.beta()) +
                  log_gamma(exponent) - e.alpha() * exponent * std::log(t));
}

ExpAsymptotic exp_asym(const MixingDensity& m, const TailEnvelope& e, double t) {
  const AsymptoticReport r = make_report(m, e);
  const SaddleSolution s = saddle_solve(e, m, t);

  ExpAsymptotic out;
  out.log_reference = std::log(r.prefactor_constant) +
                      r.prefactor_exponent_reference * std::log(t) -
                      r.rate_constant * std::pow(t, r.rate_exponent);
  out.log_laplace = std::log(m.c2()) + m.gamma() * std::log(s.q_star) +
                    0.5 * std::log(2.0 * M_PI / s.phi2_star) - s.phi_star;
  out.value_reference = std::exp(out.log_reference);
  out.value_laplace = std::exp(out.log_laplace);
  return out;
}

FitResult fit_asymptotics(const std::vector<std::pair<double, double>>& log_values,
                          double rho) {
  if (log_values.size() < 6)
    throw std::domain_error("fit_asymptotics: need at least 6 points");
  double t_min = log_values.front().first;
  double t_max = t_min;
  for (const auto& [t, lv] : log_values) {
    if (!(t > 0.0) || !std::isfinite(lv))
      throw std::domain_error("fit_asymptotics: points must have t > 0 and finite log values");
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  if (!(t_max / t_min >= 100.0 * (1.0 - 1e-12)))
    throw std::domain_error("fit_asymptotics: t must span at least two decades");

  const auto n = static_cast<Eigen::Index>(log_values.size());
  Eigen::MatrixXd design(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = log_values[static_cast<std::size_t>(i)].first;
    design(i, 0) = -std::pow(t, rho);
    design(i, 1) = std::log(t);
    design(i, 2) = 1.0;
    rhs(i) = log_values[static_cast<std::size_t>(i)].second;
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(design, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(cond <= 1e12))
    throw IllConditionedFitError("fit_asymptotics: design matrix condition number " +
                                 std::to_string(cond) + " exceeds 1e12");
  const Eigen::VectorXd coeff = svd.solve(rhs);

  FitResult fit;
  fit.rate = coeff(0);
  fit.prefactor_exponent = coeff(1);
  fit.condition_number = cond;
  return fit;
}

SlowlyVaryingProbe slowly_varying_probe(const AuxIntegralSpec& spec, double t,
                                        double rel_tol) {
  if (!(t > 0.0)) throw std::domain_error("slowly_varying_probe: t must be > 0");
  SlowlyVaryingProbe probe;
  const QuadratureResult j = aux_integral(spec, t, rel_tol);
  probe.t_theta_j = std::exp(spec.theta() * std::log(t) + j.log_value);
  probe.gamma_weight_at_inv_t = gamma_function(spec.theta()) * spec.weight(1.0 / t);

  // The fixed integral int y^{theta-1} e^{-y} L(y) dy is J[theta, 0, L](1).
  AuxIntegralSpec limit_spec(
      spec.theta(), [](double) { return 0.0; },
      [&spec](double x) { return spec.weight(x); }, spec.weight_max());
  probe.limit_integral = std::exp(aux_integral(limit_spec, 1.0, rel_tol).log_value);
  return probe;
}

}  // namespace extail
