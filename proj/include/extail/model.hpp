#ifndef EXTAIL_MODEL_HPP
#define EXTAIL_MODEL_HPP

#include <string>

// Distributional building blocks: the mixing density over the conditional
// parameter Q, the conditional tail envelopes, and the two concrete Gaussian
// conditional families. All objects are immutable after construction and all
// evaluations are pure.

namespace extail {

// Normalizer of the density c2 * Q^gamma * exp(-c3 * Q^kappa) on (0, inf):
// c2 = kappa * c3^((gamma+1)/kappa) / Gamma((gamma+1)/kappa).
double normalizer(double gamma, double kappa, double c3);

// Mixing density c2 * Q^gamma * exp(-c3 * Q^kappa) on (0, inf),
// gamma > -1, kappa > 0, c3 > 0, with the exact normalizer cached.
class MixingDensity {
 public:
  MixingDensity(double gamma, double kappa, double c3);

  double gamma() const { return gamma_; }
  double kappa() const { return kappa_; }
  double c3() const { return c3_; }
  double c2() const { return c2_; }

  // ln pdf(q), q > 0. Safe for extreme q via the log_q overload.
  double log_pdf(double q) const;
  double log_pdf_from_log(double log_q) const;

  // pdf(q), q >= 0. q == 0 returns the right limit (finite only when
  // gamma >= 0; the density diverges at the origin for gamma < 0).
  double pdf(double q) const;

 private:
  double gamma_;
  double kappa_;
  double c3_;
  double c2_;
};

enum class EnvelopeForm {
  DirectPower,   // exp(-c1 * t^alpha * q^beta)
  InversePower,  // exp(-c1 * t^alpha * q^-beta)
};

std::string to_string(EnvelopeForm form);

// Conditional tail envelope: an upper bound on P(|S(n)| >= t | Q = q),
// uniform in n. Values are in (0, 1] for t >= 0, q > 0.
class TailEnvelope {
 public:
  TailEnvelope(EnvelopeForm form, double c1, double alpha, double beta);

  EnvelopeForm form() const { return form_; }
  double c1() const { return c1_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  // Exponent is assembled in log space and exponentiated last, so large t
  // underflows to 0 instead of producing spurious NaNs.
  double log_eval(double t, double q) const;
  double log_eval_from_log(double t, double log_q) const;
  double eval(double t, double q) const;

 private:
  double form_sign() const;  // +1 DirectPower, -1 InversePower

  EnvelopeForm form_;
  double c1_;
  double alpha_;
  double beta_;
};

// Envelope for a normalized i.i.d. sum with P(|xi| >= u) <= exp(-u^m):
// sup_n P(|S(n)| >= u) <= exp(-c(m) u^min(m,2)). The constant c(m) is
// caller-supplied; no closed form is assumed. The returned envelope has no
// genuine Q-coupling and is meant to be evaluated at q = 1 (beta is set
// to 1 because zero coupling is not a valid envelope exponent).
TailEnvelope envelope_from_weibull(double m, double c_of_m);

enum class LawFamily {
  GaussianScale,      // xi | Q ~ N(0, Q^2)
  GaussianPrecision,  // xi | Q ~ N(0, 1/Q^2)
};

std::string to_string(LawFamily family);

// Conditional law of xi given Q. Both families are centered with finite
// positive variance for every Q > 0, and the normal stability under the
// n^{-1/2} normalization makes P(|S(n)| >= t | Q) identical for every n.
class ConditionalLaw {
 public:
  explicit ConditionalLaw(LawFamily family) : family_(family) {}

  LawFamily family() const { return family_; }

  double stddev(double q) const;

  // Exact conditional tail P(|S(n)| >= t | Q = q), the same for all n.
  double tail_two_sided(double t, double q) const;
  double log_tail_two_sided(double t, double q) const;

  // P(lo < xi <= hi | Q = q); lo/hi may be +-infinity.
  double interval_prob(double lo, double hi, double q) const;

  // The provable sub-Gaussian envelope exp(-t^2 / (2 sigma(q)^2)):
  // InversePower(1/2, 2, 2) for GaussianScale, DirectPower(1/2, 2, 2)
  // for GaussianPrecision.
  TailEnvelope envelope() const;

 private:
  LawFamily family_;
};

}  // namespace extail

#endif
