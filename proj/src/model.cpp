#include "extail/model.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "extail/special.hpp"

namespace extail {

namespace {

void check_mixing_params(double gamma, double kappa, double c3) {
  if (!(gamma > -1.0)) throw std::domain_error("mixing density: gamma must be > -1");
  if (!(kappa > 0.0)) throw std::domain_error("mixing density: kappa must be > 0");
  if (!(c3 > 0.0)) throw std::domain_error("mixing density: c3 must be > 0");
}

}  // namespace

double normalizer(double gamma, double kappa, double c3) {
  check_mixing_params(gamma, kappa, c3);
  const double a = (gamma + 1.0) / kappa;
  // kappa * c3^a / Gamma(a), assembled in log space to survive extreme a.
  const double log_c2 = std::log(kappa) + a * std::log(c3) - log_gamma(a);
  const double c2 = std::exp(log_c2);
  if (!std::isfinite(c2) || c2 <= 0.0)
    throw std::overflow_error("normalizer: c2 not representable for these parameters");
  return c2;
}

MixingDensity::MixingDensity(double gamma, double kappa, double c3)
    : gamma_(gamma), kappa_(kappa), c3_(c3), c2_(normalizer(gamma, kappa, c3)) {}

double MixingDensity::log_pdf(double q) const {
  if (!(q > 0.0)) throw std::domain_error("mixing_pdf: q must be > 0");
  return log_pdf_from_log(std::log(q));
}

double MixingDensity::log_pdf_from_log(double log_q) const {
  const double power_term = kappa_ * log_q;
  // exp(kappa * ln q) may overflow; the pdf is then an exact 0 in log space.
  const double decay = (power_term > 700.0) ? std::numeric_limits<double>::infinity()
                                            : c3_ * std::exp(power_term);
  return std::log(c2_) + gamma_ * log_q - decay;
}

double MixingDensity::pdf(double q) const {
  if (q < 0.0) throw std::domain_error("mixing_pdf: q must be >= 0");
  if (q == 0.0) {
    if (gamma_ > 0.0) return 0.0;
    if (gamma_ == 0.0) return c2_;
    throw std::domain_error("mixing_pdf: density diverges at q = 0 for gamma < 0");
  }
  return std::exp(log_pdf(q));
}

std::string to_string(EnvelopeForm form) {
  return form == EnvelopeForm::DirectPower ? "direct_power" : "inverse_power";
}

TailEnvelope::TailEnvelope(EnvelopeForm form, double c1, double alpha, double beta)
    : form_(form), c1_(c1), alpha_(alpha), beta_(beta) {
  if (!(c1 > 0.0)) throw std::domain_error("tail envelope: c1 must be > 0");
  if (!(alpha > 0.0)) throw std::domain_error("tail envelope: alpha must be > 0");
  if (!(beta > 0.0)) throw std::domain_error("tail envelope: beta must be > 0");
}

double TailEnvelope::form_sign() const {
  return form_ == EnvelopeForm::DirectPower ? 1.0 : -1.0;
}

double TailEnvelope::log_eval_from_log(double t, double log_q) const {
  if (!(t >= 0.0)) throw std::domain_error("envelope_eval: t must be >= 0");
  if (t == 0.0) return 0.0;
  const double power_term = alpha_ * std::log(t) + form_sign() * beta_ * log_q;
  if (power_term > 700.0) return -std::numeric_limits<double>::infinity();
  return -c1_ * std::exp(power_term);
}

double TailEnvelope::log_eval(double t, double q) const {
  if (!(q > 0.0)) throw std::domain_error("envelope_eval: q must be > 0");
  return log_eval_from_log(t, std::log(q));
}

double TailEnvelope::eval(double t, double q) const { return std::exp(log_eval(t, q)); }

TailEnvelope envelope_from_weibull(double m, double c_of_m) {
  if (!(m > 0.0)) throw std::domain_error("envelope_from_weibull: m must be > 0");
  if (!(c_of_m > 0.0)) throw std::domain_error("envelope_from_weibull: c(m) must be > 0");
  return TailEnvelope(EnvelopeForm::DirectPower, c_of_m, std::min(m, 2.0), 1.0);
}

std::string to_string(LawFamily family) {
  return family == LawFamily::GaussianScale ? "gaussian_scale" : "gaussian_precision";
}

double ConditionalLaw::stddev(double q) const {
  if (!(q > 0.0)) throw std::domain_error("conditional law: q must be > 0");
  return family_ == LawFamily::GaussianScale ? q : 1.0 / q;
}

double ConditionalLaw::tail_two_sided(double t, double q) const {
  return std::exp(log_tail_two_sided(t, q));
}

double ConditionalLaw::log_tail_two_sided(double t, double q) const {
  if (!(t >= 0.0)) throw std::domain_error("conditional law: t must be >= 0");
  return log_erfc(t / (stddev(q) * std::sqrt(2.0)));
}

double ConditionalLaw::interval_prob(double lo, double hi, double q) const {
  const double sigma = stddev(q);
  auto scale = [sigma](double x) { return std::isinf(x) ? x : x / sigma; };
  return normal_interval_prob(scale(lo), scale(hi));
}

TailEnvelope ConditionalLaw::envelope() const {
  const EnvelopeForm form = family_ == LawFamily::GaussianScale ? EnvelopeForm::InversePower
                                                                : EnvelopeForm::DirectPower;
  return TailEnvelope(form, 0.5, 2.0, 2.0);
}

}  // namespace extail
